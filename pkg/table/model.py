"""
Parse table, conflict and diff records.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from grammar.model import Grammar

FIRST_FIRST = "first-first"
FIRST_FOLLOW = "first-follow"
UNKNOWN_KIND = "unknown"

Cell = Tuple[int, int]


class TableFormatError(ValueError):
    """Table text is malformed or names symbols the grammar does not know."""


class TableShapeError(ValueError):
    """Two tables cannot be compared because their rows or columns differ."""


@dataclass(frozen=True)
class ParseTable:
    """
    Predictive parse table M[A, a].

    `cells` only holds nonempty cells; a missing cell is an error entry.
    Production indices inside a cell are in grammar declaration order.
    `via_follow` records which (row, col, production) placements came from
    the FOLLOW rule; it is None for tables loaded from text, whose provenance
    is unknown. `synthetic` lists productions a loaded table added to the
    grammar because its cells cite them.
    """

    grammar: Grammar
    rows: Tuple[int, ...]
    cols: Tuple[int, ...]
    cells: Dict[Cell, Tuple[int, ...]]
    via_follow: Optional[FrozenSet[Tuple[int, int, int]]] = None
    synthetic: Tuple[int, ...] = field(default_factory=tuple)

    def cell(self, row: int, col: int) -> Tuple[int, ...]:
        return self.cells.get((row, col), ())

    def expected(self, row: int) -> List[int]:
        """Columns of `row` with a nonempty cell, in column order."""
        return [col for col in self.cols if (row, col) in self.cells]

    def cell_texts(self, row: int, col: int) -> List[str]:
        return [self.grammar.rhs_text(self.grammar.productions[p]) for p in self.cell(row, col)]

    @property
    def row_names(self) -> List[str]:
        return [self.grammar.name(r) for r in self.rows]

    @property
    def col_names(self) -> List[str]:
        return [self.grammar.name(c) for c in self.cols]


@dataclass(frozen=True)
class ConflictEntry:
    row: str
    col: str
    productions: Tuple[int, ...]
    kind: str


@dataclass(frozen=True)
class TableDiffEntry:
    """One differing cell; `left` and `right` hold rhs texts of each side."""

    row: str
    col: str
    left: Tuple[str, ...]
    right: Tuple[str, ...]
