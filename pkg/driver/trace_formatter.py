from typing import Any, Dict, List, Sequence

from grammar.model import EPSILON
from .model import ACCEPT_ACTION, REJECT_PREFIX, MoveRecord, ParseTree

TRACE_HEADER = "Stack\tInput\tAction"


class TraceFormatter:
    """
    Text renderings of move traces and parse trees.
    """

    def format_trace(self, moves: Sequence[MoveRecord]) -> str:
        """
        Three tab-separated columns: stack (`$` first), remaining input, action.

        Args:
            moves: Moves of one parse

        Returns:
            Header plus one line per move, without a trailing newline
        """
        lines = [TRACE_HEADER]
        for move in moves:
            lines.append("\t".join([" ".join(move.stack), " ".join(move.remaining), self._action_text(move.action)]))
        return "\n".join(lines)

    def tree_to_bracketed(self, tree: ParseTree) -> str:
        """
        Render `(S (NP (noun ছেলে)) ...)`; a terminal leaf without a word is `(noun)`.

        Raises:
            ValueError: the root has no children (a tree always starts at a nonterminal)
        """
        if not tree.children:
            raise ValueError(f"parse tree root {tree.symbol!r} has no children")
        return self._bracket(tree)

    def tree_to_dict(self, tree: ParseTree) -> Dict[str, Any]:
        """Nested {symbol, surface?, children} form for JSON output."""
        node: Dict[str, Any] = {"symbol": tree.symbol}
        if tree.surface is not None:
            node["surface"] = tree.surface
        node["children"] = [self.tree_to_dict(child) for child in tree.children]
        return node

    def _bracket(self, node: ParseTree) -> str:
        if node.symbol == EPSILON and not node.children:
            return EPSILON
        if not node.children:
            return f"({node.symbol} {node.surface})" if node.surface is not None else f"({node.symbol})"
        parts: List[str] = [node.symbol] + [self._bracket(child) for child in node.children]
        return "(" + " ".join(parts) + ")"

    def _action_text(self, action: str) -> str:
        if action == ACCEPT_ACTION:
            return "Sentence is accepted"
        if action.startswith(REJECT_PREFIX):
            return f"Sentence is rejected ({action[len(REJECT_PREFIX):]})"
        return action
