from typing import List

from .model import EPSILON, Grammar


class GrammarWriter:
    """
    Writes grammars back out in the `LHS -> alt | alt ;` format.
    """

    def serialize(self, grammar: Grammar) -> str:
        """
        Render a grammar so that GrammarReader.parse_text gives it back unchanged.

        Consecutive productions of the same lhs share one rule line; production
        order is kept, so an lhs split across the grammar gets several lines.

        Args:
            grammar: Grammar to render

        Returns:
            Grammar text ending with a newline
        """
        lines: List[str] = []
        current_lhs = None
        alternatives: List[str] = []

        for lhs, rhs in grammar.rules():
            if lhs != current_lhs and current_lhs is not None:
                lines.append(self._rule_line(current_lhs, alternatives))
                alternatives = []
            current_lhs = lhs
            alternatives.append(" ".join(rhs) if rhs else EPSILON)

        lines.append(self._rule_line(current_lhs, alternatives))
        return "\n".join(lines) + "\n"

    def _rule_line(self, lhs: str, alternatives: List[str]) -> str:
        return f"{lhs} -> {' | '.join(alternatives)} ;"
