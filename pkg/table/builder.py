import logging
from typing import Dict, List, Set, Tuple

from analysis.set_analyzer import SetAnalyzer
from analysis.sets import FirstSets, FollowSets
from grammar.model import END_ID, Grammar
from .model import FIRST_FIRST, FIRST_FOLLOW, UNKNOWN_KIND, Cell, ConflictEntry, ParseTable

logger = logging.getLogger(__name__)


class TableBuilder:
    """
    Builds predictive parse tables and reports their conflicts.
    """

    def __init__(self):
        self.analyzer = SetAnalyzer()

    def build_table(self, grammar: Grammar, first_sets: FirstSets, follow_sets: FollowSets) -> Tuple[ParseTable, List[ConflictEntry]]:
        """
        Place every production A -> a into the table.

        A -> a goes to M[A, t] for each t in FIRST(a); when a is nullable it
        also goes to M[A, b] for each b in FOLLOW(A), `$` included. Conflicts
        are kept in the cells and reported, never dropped.

        Args:
            grammar: Grammar to tabulate
            first_sets: FIRST sets of the grammar
            follow_sets: FOLLOW sets of the grammar

        Returns:
            (table, conflicts)
        """
        cells: Dict[Cell, List[int]] = {}
        via_follow: Set[Tuple[int, int, int]] = set()

        for production in grammar.productions:
            terminals, nullable = self.analyzer.first_of_sequence(production.rhs, first_sets, grammar)
            targets = set(terminals)
            if nullable:
                for column in follow_sets.of(production.lhs):
                    targets.add(column)
                    via_follow.add((production.lhs, column, production.index))
            for column in targets:
                cells.setdefault((production.lhs, column), []).append(production.index)

        table = ParseTable(
            grammar=grammar,
            rows=grammar.nonterminals,
            cols=grammar.terminals + (END_ID,),
            cells={cell: tuple(indices) for cell, indices in cells.items()},
            via_follow=frozenset(via_follow),
        )
        found = self.conflicts(table)
        logger.info(f"Built {len(table.rows)}x{len(table.cols)} table: {len(table.cells)} filled cells, {len(found)} conflicts")
        return table, found

    def build(self, grammar: Grammar) -> Tuple[ParseTable, List[ConflictEntry]]:
        """Analyse the grammar and build its table in one call."""
        first_sets, follow_sets = self.analyzer.analyze(grammar)
        return self.build_table(grammar, first_sets, follow_sets)

    def conflicts(self, table: ParseTable) -> List[ConflictEntry]:
        """
        Every cell holding two or more productions, in row then column order.

        Args:
            table: Built or loaded table

        Returns:
            Conflict entries; kind is `unknown` for loaded tables
        """
        found = []
        for row in table.rows:
            for col in table.cols:
                productions = table.cell(row, col)
                if len(productions) < 2:
                    continue
                found.append(ConflictEntry(
                    row=table.grammar.name(row),
                    col=table.grammar.name(col),
                    productions=productions,
                    kind=self._kind(table, row, col, productions),
                ))
        return found

    def _kind(self, table: ParseTable, row: int, col: int, productions) -> str:
        if table.via_follow is None:
            return UNKNOWN_KIND
        if any((row, col, p) in table.via_follow for p in productions):
            return FIRST_FOLLOW
        return FIRST_FIRST
