import logging
from typing import Dict, FrozenSet, Optional, Sequence, Set, Tuple

from grammar.model import END_ID, Grammar
from .sets import FirstSets, FollowSets

logger = logging.getLogger(__name__)


class SetAnalyzer:
    """
    Nullable, FIRST and FOLLOW sets by fixpoint iteration.

    Every pass walks the productions in declaration order and only ever adds
    members, so results do not depend on iteration order. `passes` keeps the
    number of passes each computation needed (the last, unchanged, pass
    included) for the logs.
    """

    def __init__(self):
        self.passes: Dict[str, int] = {}

    def compute_nullable(self, grammar: Grammar) -> FrozenSet[int]:
        nullable: Set[int] = set()
        passes = 0
        changed = True
        while changed:
            changed = False
            passes += 1
            for production in grammar.productions:
                if production.lhs in nullable:
                    continue
                if all(symbol in nullable for symbol in production.rhs):
                    nullable.add(production.lhs)
                    changed = True
        self.passes["nullable"] = passes
        logger.debug(f"Nullable fixpoint after {passes} passes: {len(nullable)} nullable nonterminals")
        return frozenset(nullable)

    def compute_first(self, grammar: Grammar, nullable: Optional[FrozenSet[int]] = None) -> FirstSets:
        """
        Compute FIRST of every nonterminal.

        For A -> Y1 ... Yn, FIRST(Y1) goes into FIRST(A), and FIRST(Yi+1) too
        whenever Y1 ... Yi are all nullable.

        Args:
            grammar: Grammar to analyse
            nullable: Precomputed nullable set; computed when omitted

        Returns:
            FirstSets holding the terminal sets and the nullable set
        """
        if nullable is None:
            nullable = self.compute_nullable(grammar)

        first: Dict[int, Set[int]] = {nt: set() for nt in grammar.nonterminals}
        passes = 0
        changed = True
        while changed:
            changed = False
            passes += 1
            for production in grammar.productions:
                target = first[production.lhs]
                before = len(target)
                for symbol in production.rhs:
                    if grammar.is_terminal(symbol):
                        target.add(symbol)
                        break
                    target |= first[symbol]
                    if symbol not in nullable:
                        break
                if len(target) != before:
                    changed = True

        self.passes["first"] = passes
        logger.debug(f"FIRST fixpoint after {passes} passes")
        return FirstSets(
            first={nt: frozenset(members) for nt, members in first.items()},
            nullable=frozenset(nullable),
        )

    def first_of_sequence(self, sequence: Sequence[int], first_sets: FirstSets, grammar: Grammar) -> Tuple[FrozenSet[int], bool]:
        """
        FIRST of a symbol sequence.

        Args:
            sequence: Symbol ids, e.g. a production rhs
            first_sets: FIRST sets of the grammar the ids belong to
            grammar: That grammar, used to tell terminals from nonterminals

        Returns:
            (terminals, nullable); the empty sequence gives (empty set, True)
        """
        terminals: Set[int] = set()
        for symbol in sequence:
            if grammar.is_terminal(symbol):
                terminals.add(symbol)
                return frozenset(terminals), False
            terminals |= first_sets.of(symbol)
            if not first_sets.is_nullable(symbol):
                return frozenset(terminals), False
        return frozenset(terminals), True

    def compute_follow(self, grammar: Grammar, first_sets: FirstSets) -> FollowSets:
        """
        Compute FOLLOW of every nonterminal.

        `$` is in FOLLOW(start); for B -> a A b everything in FIRST(b) is in
        FOLLOW(A), and FOLLOW(B) is in FOLLOW(A) when b is nullable. Only
        productions of nonterminals reachable from the start symbol take part,
        so an unreachable nonterminal has an empty FOLLOW set.

        Args:
            grammar: Grammar to analyse
            first_sets: FIRST sets of the same grammar

        Returns:
            FollowSets with END_ID standing for `$`
        """
        reachable = grammar.reachable()
        follow: Dict[int, Set[int]] = {nt: set() for nt in grammar.nonterminals}
        follow[grammar.start].add(END_ID)

        passes = 0
        changed = True
        while changed:
            changed = False
            passes += 1
            for production in grammar.productions:
                if production.lhs not in reachable:
                    continue
                rhs = production.rhs
                for position, symbol in enumerate(rhs):
                    if not grammar.is_nonterminal(symbol):
                        continue
                    target = follow[symbol]
                    before = len(target)
                    rest, rest_nullable = self.first_of_sequence(rhs[position + 1:], first_sets, grammar)
                    target |= rest
                    if rest_nullable:
                        target |= follow[production.lhs]
                    if len(target) != before:
                        changed = True

        self.passes["follow"] = passes
        logger.debug(f"FOLLOW fixpoint after {passes} passes")
        return FollowSets(follow={nt: frozenset(members) for nt, members in follow.items()})

    def analyze(self, grammar: Grammar) -> Tuple[FirstSets, FollowSets]:
        """Run nullable, FIRST and FOLLOW in order."""
        first_sets = self.compute_first(grammar, self.compute_nullable(grammar))
        follow_sets = self.compute_follow(grammar, first_sets)
        logger.info(
            f"Analysed {len(grammar.nonterminals)} nonterminals "
            f"(passes: nullable {self.passes['nullable']}, first {self.passes['first']}, follow {self.passes['follow']})"
        )
        return first_sets, follow_sets
