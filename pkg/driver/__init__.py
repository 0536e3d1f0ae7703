"""
Driver package: the table-driven predictive parser, its records and trace output.
"""

from .config import BACKTRACKING, DETERMINISTIC, ParserConfig
from .model import (
    DriverPolicy,
    MoveRecord,
    ParseOutcome,
    ParseResult,
    ParseTree,
    RejectInfo,
    UnknownTerminalError,
)
from .predictive_parser import PredictiveParser
from .trace_formatter import TraceFormatter

__all__ = [
    'ParserConfig', 'DETERMINISTIC', 'BACKTRACKING',
    'DriverPolicy', 'MoveRecord', 'ParseOutcome', 'ParseResult', 'ParseTree', 'RejectInfo', 'UnknownTerminalError',
    'PredictiveParser', 'TraceFormatter',
]
