import logging
from typing import List

from .model import ParseTable, TableDiffEntry, TableShapeError

logger = logging.getLogger(__name__)


class TableDiffer:
    """
    Cell-by-cell comparison of two tables, aligned by symbol name.
    """

    def diff(self, left: ParseTable, right: ParseTable) -> List[TableDiffEntry]:
        """
        List every cell whose contents differ.

        Cells are compared as rhs texts, so tables over different (shadow)
        grammars line up. Entries follow the left table's row and column order.

        Args:
            left: First table
            right: Second table

        Returns:
            Differing cells; empty when the tables agree everywhere
        """
        left_rows, right_rows = left.row_names, right.row_names
        left_cols, right_cols = left.col_names, right.col_names
        if set(left_rows) != set(right_rows):
            raise TableShapeError(f"row sets differ: {sorted(set(left_rows) ^ set(right_rows))}")
        if set(left_cols) != set(right_cols):
            raise TableShapeError(f"column sets differ: {sorted(set(left_cols) ^ set(right_cols))}")

        right_grammar = right.grammar
        entries = []
        for row in left.rows:
            row_name = left.grammar.name(row)
            for col in left.cols:
                col_name = left.grammar.name(col)
                left_texts = tuple(left.cell_texts(row, col))
                right_texts = tuple(right.cell_texts(right_grammar.id_of(row_name), right_grammar.id_of(col_name)))
                if left_texts != right_texts:
                    entries.append(TableDiffEntry(row_name, col_name, left_texts, right_texts))

        logger.info(f"Table diff: {len(entries)} differing cells")
        return entries
