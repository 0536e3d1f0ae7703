"""
Brute-force FIRST/FOLLOW oracles used to cross-check the fixpoint analysis.
"""

import logging
from typing import Dict, FrozenSet, List, Set, Tuple

from grammar.model import END_ID, Grammar
from .sets import FirstSets, FollowSets

logger = logging.getLogger(__name__)

Form = Tuple[int, ...]

MAX_NONTERMINALS = 20
FORM_CAP = 1_000_000


class OracleBudgetError(RuntimeError):
    """Derivation enumeration went past its sentential-form cap."""


class DerivationOracle:
    """
    Enumerates leftmost derivations breadth first, up to `depth` expansions.

    Sentential forms are kept in a reduced shape: everything after the first
    terminal is dropped (it cannot change which terminal comes first), and a
    nonterminal that already occurs earlier in the form is dropped too (its
    second occurrence only matters when the first one vanishes, in which case
    it vanishes as well). Leading terminals and derivability of the empty
    string are the same for a form and its reduced shape, and the reduced
    shapes of a grammar are finitely many.
    """

    def __init__(self, depth: int, form_cap: int = FORM_CAP):
        if depth < 1:
            raise ValueError(f"oracle depth must be positive, got {depth}")
        self.depth = depth
        self.form_cap = form_cap
        self._forms = 0

    def first_sets(self, grammar: Grammar) -> FirstSets:
        """
        Leading terminals and nullability of each nonterminal, by enumeration.

        Args:
            grammar: Grammar with at most 20 nonterminals

        Returns:
            FirstSets comparable with SetAnalyzer.compute_first
        """
        self._check_size(grammar)
        self._forms = 0
        first: Dict[int, FrozenSet[int]] = {}
        nullable: Set[int] = set()
        for nonterminal in grammar.nonterminals:
            terminals, empty = self._leading(grammar, (nonterminal,))
            first[nonterminal] = terminals
            if empty:
                nullable.add(nonterminal)
        logger.debug(f"FIRST oracle visited {self._forms} forms at depth {self.depth}")
        return FirstSets(first=first, nullable=frozenset(nullable))

    def follow_sets(self, grammar: Grammar) -> FollowSets:
        """
        Symbols seen right after each nonterminal in forms derived from `start $`.

        The search runs over pairs (X, context): X occurs in some sentential
        form and `context` is the reduced form of what stands to its right.
        Expanding X by X -> g puts every nonterminal g[i] in front of the
        context g[i+1:] + context. FOLLOW(X) collects the leading terminals
        (or `$`) of every context X is paired with.

        Args:
            grammar: Grammar with at most 20 nonterminals

        Returns:
            FollowSets comparable with SetAnalyzer.compute_follow
        """
        self._check_size(grammar)
        self._forms = 0
        follow: Dict[int, Set[int]] = {nt: set() for nt in grammar.nonterminals}
        leading_cache: Dict[Form, FrozenSet[int]] = {}

        start_state = (grammar.start, (END_ID,))
        visited = {start_state}
        frontier: List[Tuple[int, Form]] = [start_state]

        for level in range(self.depth + 1):
            following: List[Tuple[int, Form]] = []
            for nonterminal, context in frontier:
                if context not in leading_cache:
                    leading_cache[context] = self._leading(grammar, context)[0]
                follow[nonterminal] |= leading_cache[context]
                if level == self.depth:
                    continue
                for production in grammar.productions_for(nonterminal):
                    rhs = production.rhs
                    for position, symbol in enumerate(rhs):
                        if not grammar.is_nonterminal(symbol):
                            continue
                        state = (symbol, self._reduce(grammar, rhs[position + 1:] + context))
                        if state not in visited:
                            visited.add(state)
                            self._count()
                            following.append(state)
            frontier = following
            if not frontier:
                break

        logger.debug(f"FOLLOW oracle visited {len(visited)} states and {self._forms} forms at depth {self.depth}")
        return FollowSets(follow={nt: frozenset(members) for nt, members in follow.items()})

    def _leading(self, grammar: Grammar, form: Form) -> Tuple[FrozenSet[int], bool]:
        """Terminals (END_ID included) that can begin `form`, and whether it can vanish."""
        terminals: Set[int] = set()
        empty = False
        start = self._reduce(grammar, form)
        visited = {start}
        frontier = [start]

        for level in range(self.depth + 1):
            following: List[Form] = []
            for current in frontier:
                if not current:
                    empty = True
                    continue
                head = current[0]
                if self._is_leaf(grammar, head):
                    terminals.add(head)
                    continue
                if level == self.depth:
                    continue
                for production in grammar.productions_for(head):
                    successor = self._reduce(grammar, production.rhs + current[1:])
                    if successor not in visited:
                        visited.add(successor)
                        self._count()
                        following.append(successor)
            frontier = following
            if not frontier:
                break

        return frozenset(terminals), empty

    def _reduce(self, grammar: Grammar, form: Form) -> Form:
        reduced: List[int] = []
        seen: Set[int] = set()
        for symbol in form:
            if self._is_leaf(grammar, symbol):
                reduced.append(symbol)
                break
            if symbol in seen:
                continue
            seen.add(symbol)
            reduced.append(symbol)
        return tuple(reduced)

    def _is_leaf(self, grammar: Grammar, symbol: int) -> bool:
        return symbol == END_ID or grammar.is_terminal(symbol)

    def _count(self):
        self._forms += 1
        if self._forms > self.form_cap:
            raise OracleBudgetError(f"derivation enumeration passed {self.form_cap} sentential forms")

    def _check_size(self, grammar: Grammar):
        if len(grammar.nonterminals) > MAX_NONTERMINALS:
            raise OracleBudgetError(
                f"grammar has {len(grammar.nonterminals)} nonterminals; the oracle handles at most {MAX_NONTERMINALS}"
            )
