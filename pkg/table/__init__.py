"""
Table package: predictive parse tables, conflicts, text format and diffs.
"""

from .model import (
    FIRST_FIRST,
    FIRST_FOLLOW,
    UNKNOWN_KIND,
    ConflictEntry,
    ParseTable,
    TableDiffEntry,
    TableFormatError,
    TableShapeError,
)
from .builder import TableBuilder
from .serializer import TableSerializer
from .differ import TableDiffer

__all__ = [
    'ParseTable', 'ConflictEntry', 'TableDiffEntry', 'TableFormatError', 'TableShapeError',
    'FIRST_FIRST', 'FIRST_FOLLOW', 'UNKNOWN_KIND',
    'TableBuilder', 'TableSerializer', 'TableDiffer',
]
