import logging
from typing import List, Optional, Sequence, Tuple

from grammar.model import END_ID, END_MARKER, EPSILON, Grammar
from table.model import ParseTable
from .config import BACKTRACKING, DETERMINISTIC
from .model import (
    ACCEPT_ACTION,
    ACCEPTED,
    BUDGET_EXHAUSTED,
    EMPTY_CELL,
    INPUT_EXHAUSTED,
    INPUT_REMAINING,
    REJECT_PREFIX,
    REJECTED,
    TERMINAL_MISMATCH,
    DriverPolicy,
    MoveRecord,
    ParseOutcome,
    ParseResult,
    ParseTree,
    RejectInfo,
    UnknownTerminalError,
)

logger = logging.getLogger(__name__)

Stack = Tuple[int, ...]


class _Branch:
    """One machine configuration on the search agenda."""

    __slots__ = ("stack", "position", "moves", "applied", "pending")

    def __init__(self, stack: Stack, position: int, moves: List[MoveRecord], applied: List[int], pending: Optional[int] = None):
        self.stack = stack
        self.position = position
        self.moves = moves
        self.applied = applied
        self.pending = pending


class PredictiveParser:
    """
    Table-driven predictive parser.

    The stack starts as `$ S`. With X on top and lookahead a: a terminal X is
    popped when it equals a; a nonterminal X is replaced by the rhs of a
    production in M[X, a], pushed right to left; `$` on top accepts when the
    input is used up. Anything else rejects.

    In deterministic mode only the first entry of a cell is used. In
    backtracking mode the other entries are tried depth first, in cell
    order, when a choice leads to rejection; every expansion over all
    branches counts against the policy's step budget.
    """

    def __init__(self, table: ParseTable):
        self.table = table
        self.grammar: Grammar = table.grammar

    def parse(self, tags: Sequence[str], policy: Optional[DriverPolicy] = None, surfaces: Optional[Sequence[str]] = None) -> ParseResult:
        """
        Parse a tag sequence.

        Args:
            tags: Terminal names of the sentence
            policy: Mode and step budget; ParserConfig defaults when omitted
            surfaces: Words behind the tags, attached to the tree leaves

        Returns:
            ParseResult with the verdict, the move trace of the accepting
            branch (or of the branch that got furthest) and, on acceptance,
            the parse tree

        Raises:
            UnknownTerminalError: a tag is not a terminal of the grammar
        """
        policy = policy or DriverPolicy.default()
        if policy.mode not in (DETERMINISTIC, BACKTRACKING):
            raise ValueError(f"unknown driver mode {policy.mode!r}")
        if surfaces is not None and len(surfaces) != len(tags):
            raise ValueError(f"{len(surfaces)} surfaces for {len(tags)} tags")

        tokens = self._token_ids(tags)
        start_stack = (END_ID, self.grammar.start)
        first = MoveRecord(self._names(start_stack), self._remaining(tokens, 0), "")
        agenda: List[_Branch] = [_Branch(start_stack, 0, [first], [])]

        expansions = 0
        best: Optional[Tuple[RejectInfo, List[MoveRecord]]] = None

        while agenda:
            branch = agenda.pop()
            stack, position, moves, applied = branch.stack, branch.position, branch.moves, branch.applied

            if branch.pending is not None:
                if expansions >= policy.step_budget:
                    best = self._budget_exhausted(stack, tokens, position, moves)
                    break
                expansions += 1
                stack = self._expand(stack, branch.pending, tokens, position, moves, applied)

            failure = None
            while failure is None:
                top = stack[-1]
                lookahead = tokens[position]

                if top == END_ID:
                    if lookahead == END_ID:
                        moves.append(MoveRecord(self._names(stack), self._remaining(tokens, position), ACCEPT_ACTION))
                        logger.debug(f"Accepted after {expansions} expansions")
                        outcome = ParseOutcome(ACCEPTED)
                        tree = self._build_tree(applied, surfaces)
                        return ParseResult(outcome, tuple(moves), tree)
                    failure = RejectInfo(position, END_MARKER, (END_MARKER,), INPUT_REMAINING)

                elif self.grammar.is_terminal(top):
                    if top != lookahead:
                        reason = INPUT_EXHAUSTED if lookahead == END_ID else TERMINAL_MISMATCH
                        failure = RejectInfo(position, self.grammar.name(top), (self.grammar.name(top),), reason)
                        continue
                    stack = stack[:-1]
                    position += 1
                    moves.append(MoveRecord(self._names(stack), self._remaining(tokens, position), f"matched {self.grammar.name(top)}"))

                else:
                    cell = self.table.cell(top, lookahead)
                    if not cell:
                        expected = tuple(self.grammar.name(c) for c in self.table.expected(top))
                        failure = RejectInfo(position, self.grammar.name(top), expected, EMPTY_CELL)
                        continue
                    if expansions >= policy.step_budget:
                        best = self._budget_exhausted(stack, tokens, position, moves)
                        agenda.clear()
                        break
                    if policy.mode == BACKTRACKING:
                        for production in reversed(cell[1:]):
                            agenda.append(_Branch(stack, position, list(moves), list(applied), production))
                    expansions += 1
                    stack = self._expand(stack, cell[0], tokens, position, moves, applied)

            if failure is not None:
                moves.append(MoveRecord(self._names(stack), self._remaining(tokens, position), REJECT_PREFIX + failure.reason))
                if best is None or failure.position > best[0].position:
                    best = (failure, moves)

        info, moves = best
        logger.debug(f"Rejected ({info.reason}) at token {info.position} after {expansions} expansions")
        return ParseResult(ParseOutcome(REJECTED, info), tuple(moves), None)

    def _token_ids(self, tags: Sequence[str]) -> List[int]:
        tokens = []
        for position, tag in enumerate(tags):
            if not self.grammar.has_symbol(tag) or not self.grammar.is_terminal(self.grammar.id_of(tag)):
                raise UnknownTerminalError(tag, position)
            tokens.append(self.grammar.id_of(tag))
        tokens.append(END_ID)
        return tokens

    def _expand(self, stack: Stack, production_index: int, tokens: List[int], position: int, moves: List[MoveRecord], applied: List[int]) -> Stack:
        production = self.grammar.productions[production_index]
        stack = stack[:-1] + tuple(reversed(production.rhs))
        applied.append(production_index)
        moves.append(MoveRecord(self._names(stack), self._remaining(tokens, position), self.grammar.format_production(production)))
        return stack

    def _budget_exhausted(self, stack: Stack, tokens: List[int], position: int, moves: List[MoveRecord]) -> Tuple[RejectInfo, List[MoveRecord]]:
        top = stack[-1]
        expected = tuple(self.grammar.name(c) for c in self.table.expected(top)) if self.grammar.is_nonterminal(top) else ()
        info = RejectInfo(position, self.grammar.name(top), expected, BUDGET_EXHAUSTED)
        moves.append(MoveRecord(self._names(stack), self._remaining(tokens, position), REJECT_PREFIX + BUDGET_EXHAUSTED))
        logger.warning(f"Step budget exhausted at token {position}")
        return info, moves

    def _build_tree(self, applied: List[int], surfaces: Optional[Sequence[str]]) -> ParseTree:
        """Replay the applied productions, which come in leftmost-derivation order."""
        productions = iter(applied)
        leaf = 0
        root = ParseTree(self.grammar.start_name)
        work = [(root, self.grammar.start)]
        while work:
            node, symbol = work.pop()
            if self.grammar.is_terminal(symbol):
                node.surface = surfaces[leaf] if surfaces is not None else None
                leaf += 1
                continue
            production = self.grammar.productions[next(productions)]
            if production.is_epsilon:
                node.children.append(ParseTree(EPSILON))
                continue
            children = [(ParseTree(self.grammar.name(s)), s) for s in production.rhs]
            node.children.extend(child for child, _ in children)
            work.extend(reversed(children))
        return root

    def _names(self, stack: Stack) -> Tuple[str, ...]:
        return tuple(self.grammar.name(s) for s in stack)

    def _remaining(self, tokens: List[int], position: int) -> Tuple[str, ...]:
        return tuple(self.grammar.name(t) for t in tokens[position:])
