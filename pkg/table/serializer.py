import re
import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

from grammar.model import END_MARKER, EPSILON, Grammar
from .model import Cell, ConflictEntry, ParseTable, TableFormatError

logger = logging.getLogger(__name__)

ALTERNATIVE_SEPARATOR = " / "


class TableSerializer:
    """
    Tab-separated text form of parse tables.

    Line one is `TABLE <name>`, line two the header (an empty field, then
    column names with `$` last), then one line per row: the nonterminal and
    one field per column. A field holds nothing, one rhs, or several rhs
    separated by ` / `; `@eps` is the empty rhs.
    """

    def serialize(self, table: ParseTable, name: str = "G") -> str:
        """
        Render a table as text.

        Args:
            table: Table to render
            name: Grammar name for the TABLE line

        Returns:
            Table text ending with a newline
        """
        lines = [f"TABLE {name}", "\t".join([""] + table.col_names)]
        for row in table.rows:
            fields = [table.grammar.name(row)]
            for col in table.cols:
                fields.append(ALTERNATIVE_SEPARATOR.join(table.cell_texts(row, col)))
            lines.append("\t".join(fields))
        return "\n".join(lines) + "\n"

    def load(self, text: str, grammar: Grammar) -> ParseTable:
        """
        Read table text against a grammar.

        A cell rhs that is not a production of its row's nonterminal becomes a
        synthetic production appended to a copy of the grammar; the returned
        table refers to that copy and lists the additions in `synthetic`.

        Args:
            text: Table text
            grammar: Grammar the table was written for

        Returns:
            Loaded table (conflict kinds unknown)
        """
        lines = [line.rstrip("\r") for line in text.splitlines()]
        while lines and not lines[-1].strip():
            lines.pop()
        if len(lines) < 2:
            raise TableFormatError("table text needs a TABLE line and a header line")
        if not lines[0].startswith("TABLE"):
            raise TableFormatError(f"line 1: expected 'TABLE <name>', found {lines[0]!r}")

        header = lines[1].split("\t")
        if header[0].strip():
            raise TableFormatError("line 2: header must start with an empty field")
        col_names = [name.strip() for name in header[1:]]
        cols = self._columns(col_names, grammar)

        rows: List[int] = []
        raw_cells: Dict[Cell, List[Tuple[str, ...]]] = {}
        extra: List[Tuple[str, Tuple[str, ...]]] = []

        for line_number, line in enumerate(lines[2:], 3):
            if not line.strip():
                continue
            fields = line.split("\t")
            row_name = fields[0].strip()
            if not grammar.has_symbol(row_name) or not grammar.is_nonterminal(grammar.id_of(row_name)):
                raise TableFormatError(f"line {line_number}: row {row_name!r} is not a nonterminal of the grammar")
            row = grammar.id_of(row_name)
            if row in rows:
                raise TableFormatError(f"line {line_number}: row {row_name!r} appears twice")
            if len(fields) - 1 > len(cols):
                raise TableFormatError(f"line {line_number}: {len(fields) - 1} cells for {len(cols)} columns")
            rows.append(row)

            for col, field_text in zip(cols, fields[1:]):
                alternatives = self._cell_alternatives(field_text, grammar, line_number)
                if not alternatives:
                    continue
                raw_cells[(row, col)] = alternatives
                for rhs in alternatives:
                    ids = [grammar.id_of(name) for name in rhs]
                    rule = (row_name, rhs)
                    if grammar.find_production(row, ids) is None and rule not in extra:
                        extra.append(rule)

        shadow = grammar.with_rules(extra) if extra else grammar
        synthetic = tuple(range(len(grammar.productions), len(shadow.productions)))
        for lhs, rhs in extra:
            logger.warning(f"Table cites {lhs}->{' '.join(rhs) or EPSILON}, which the grammar lacks; added as synthetic")

        cells: Dict[Cell, Tuple[int, ...]] = {}
        for (row, col), alternatives in raw_cells.items():
            indices = [shadow.find_production(row, [shadow.id_of(n) for n in rhs]).index for rhs in alternatives]
            cells[(row, col)] = tuple(sorted(indices))

        table = ParseTable(
            grammar=shadow,
            rows=tuple(rows),
            cols=tuple(cols),
            cells=cells,
            via_follow=None,
            synthetic=synthetic,
        )
        logger.info(f"Loaded {len(rows)}x{len(cols)} table, {len(cells)} filled cells, {len(synthetic)} synthetic productions")
        return table

    def to_json(self, table: ParseTable, conflicts: Optional[Sequence[ConflictEntry]] = None, name: str = "G") -> Dict[str, Any]:
        """Structured export: rows, cols and cells as nested arrays of rhs texts."""
        grammar = table.grammar
        return {
            "name": name,
            "rows": table.row_names,
            "cols": table.col_names,
            "cells": [[table.cell_texts(row, col) for col in table.cols] for row in table.rows],
            "synthetic": [grammar.format_production(grammar.productions[p]) for p in table.synthetic],
            "conflicts": [
                {
                    "row": entry.row,
                    "col": entry.col,
                    "productions": [grammar.format_production(grammar.productions[p]) for p in entry.productions],
                    "kind": entry.kind,
                }
                for entry in conflicts or []
            ],
        }

    def _columns(self, names: List[str], grammar: Grammar) -> List[int]:
        cols: List[int] = []
        for name in names:
            if name != END_MARKER and (not grammar.has_symbol(name) or not grammar.is_terminal(grammar.id_of(name))):
                raise TableFormatError(f"line 2: column {name!r} is not a terminal of the grammar")
            col = grammar.id_of(name)
            if col in cols:
                raise TableFormatError(f"line 2: column {name!r} appears twice")
            cols.append(col)
        return cols

    def _cell_alternatives(self, text: str, grammar: Grammar, line_number: int) -> List[Tuple[str, ...]]:
        text = text.strip()
        if not text:
            return []
        alternatives: List[Tuple[str, ...]] = []
        for part in re.split(r"\s+/\s+", text):
            names = part.split()
            if not names:
                raise TableFormatError(f"line {line_number}: empty alternative in cell {text!r}")
            if EPSILON in names:
                if len(names) > 1:
                    raise TableFormatError(f"line {line_number}: '@eps' must stand alone in cell {text!r}")
                rhs: Tuple[str, ...] = ()
            else:
                for name in names:
                    if name == END_MARKER or not grammar.has_symbol(name):
                        raise TableFormatError(f"line {line_number}: unknown symbol {name!r} in cell {text!r}")
                rhs = tuple(names)
            if rhs in alternatives:
                raise TableFormatError(f"line {line_number}: cell {text!r} lists an rhs twice")
            alternatives.append(rhs)
        return alternatives
