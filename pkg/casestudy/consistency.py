import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from analysis.set_dump import DumpedSets, format_set
from grammar.model import Grammar
from table.differ import TableDiffer
from .loader import CaseStudy

logger = logging.getLogger(__name__)

FIRST_SET = "first-set"
FOLLOW_SET = "follow-set"
TABLE_CELL = "table-cell"
PRODUCTION = "production"

EMPTY_CELL_TEXT = "(empty)"
MISSING_TEXT = "(missing)"
ABSENT_TEXT = "(not in grammar)"


@dataclass(frozen=True)
class ConsistencyFinding:
    subject: str
    location: str
    published_value: str
    computed_value: str


class ConsistencyChecker:
    """
    Lists every place where the published artifacts and the computed ones disagree.
    """

    def __init__(self):
        self.differ = TableDiffer()

    def report(self, case: CaseStudy) -> List[ConsistencyFinding]:
        """
        Compare the published sets and table against the computed ones.

        Findings come grouped by subject: FIRST sets, FOLLOW sets, table
        cells, then productions the published table cites that the grammar
        lacks. Inside a group they follow grammar and table order.

        Args:
            case: Loaded case study

        Returns:
            Findings; rerunning on the same fixtures gives the same list
        """
        grammar = case.grammar
        computed_first = {
            grammar.name(n): (frozenset(grammar.name(t) for t in case.first_sets.of(n)), case.first_sets.is_nullable(n))
            for n in grammar.nonterminals
        }
        computed_follow = {
            grammar.name(n): (frozenset(grammar.name(t) for t in case.follow_sets.of(n)), False)
            for n in grammar.nonterminals
        }

        findings: List[ConsistencyFinding] = []
        findings.extend(self._set_findings(FIRST_SET, grammar, case.published_first, computed_first))
        findings.extend(self._set_findings(FOLLOW_SET, grammar, case.published_follow, computed_follow))

        for entry in self.differ.diff(case.computed_table, case.transcribed_table):
            findings.append(ConsistencyFinding(
                TABLE_CELL,
                f"{entry.row}, {entry.col}",
                self._cell_text(entry.right),
                self._cell_text(entry.left),
            ))

        shadow = case.transcribed_table.grammar
        for index in case.transcribed_table.synthetic:
            production = shadow.productions[index]
            findings.append(ConsistencyFinding(
                PRODUCTION,
                shadow.format_production(production),
                "cited by the published table",
                ABSENT_TEXT,
            ))

        logger.info(f"Consistency report: {len(findings)} findings")
        return findings

    def format_report(self, findings: List[ConsistencyFinding]) -> str:
        """One tab-separated line per finding, ending with a newline when non-empty."""
        lines = [
            f"{f.subject}\t{f.location}\tpublished: {f.published_value}\tcomputed: {f.computed_value}"
            for f in findings
        ]
        return "".join(line + "\n" for line in lines)

    def _set_findings(self, subject: str, grammar: Grammar, published: DumpedSets,
                      computed: Dict[str, Tuple[frozenset, bool]]) -> List[ConsistencyFinding]:
        findings = []
        for nonterminal in grammar.nonterminals:
            name = grammar.name(nonterminal)
            mine = computed[name]
            theirs: Optional[Tuple[frozenset, bool]] = published.get(name)
            if theirs == mine:
                continue
            published_text = format_set(*theirs) if theirs is not None else MISSING_TEXT
            findings.append(ConsistencyFinding(subject, name, published_text, format_set(*mine)))
        for name in sorted(set(published) - set(computed)):
            findings.append(ConsistencyFinding(subject, name, format_set(*published[name]), ABSENT_TEXT))
        return findings

    def _cell_text(self, alternatives: Tuple[str, ...]) -> str:
        return " / ".join(alternatives) if alternatives else EMPTY_CELL_TEXT
