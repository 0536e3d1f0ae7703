from dataclasses import dataclass
from typing import Dict, FrozenSet


@dataclass(frozen=True)
class FirstSets:
    """
    FIRST set of every nonterminal plus the nullable nonterminals.

    Epsilon is never a member of `first`; it is expressed through `nullable`.
    FIRST of a terminal is the terminal itself and is not stored.
    """

    first: Dict[int, FrozenSet[int]]
    nullable: FrozenSet[int]

    def of(self, nonterminal: int) -> FrozenSet[int]:
        return self.first.get(nonterminal, frozenset())

    def is_nullable(self, nonterminal: int) -> bool:
        return nonterminal in self.nullable


@dataclass(frozen=True)
class FollowSets:
    """FOLLOW set of every nonterminal; members are terminal ids and END_ID."""

    follow: Dict[int, FrozenSet[int]]

    def of(self, nonterminal: int) -> FrozenSet[int]:
        return self.follow.get(nonterminal, frozenset())
