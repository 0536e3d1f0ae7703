"""
Records produced by a parse: policy, moves, verdict and tree.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .config import DETERMINISTIC, ParserConfig

ACCEPTED = "accepted"
REJECTED = "rejected"

EMPTY_CELL = "empty-cell"
TERMINAL_MISMATCH = "terminal-mismatch"
INPUT_EXHAUSTED = "input-exhausted-stack-nonempty"
INPUT_REMAINING = "input-remaining-stack-empty"
BUDGET_EXHAUSTED = "budget-exhausted"
UNKNOWN_TERMINAL = "unknown-terminal"

ACCEPT_ACTION = "accept"
REJECT_PREFIX = "reject: "


class UnknownTerminalError(LookupError):
    """A tag of the input is not a terminal of the grammar."""

    def __init__(self, tag: str, position: int):
        super().__init__(f"unknown terminal {tag!r} at token {position}")
        self.tag = tag
        self.position = position

    def __str__(self) -> str:
        return self.args[0]


@dataclass(frozen=True)
class DriverPolicy:
    mode: str = DETERMINISTIC
    step_budget: int = 100000

    @classmethod
    def default(cls) -> "DriverPolicy":
        return cls(mode=ParserConfig.DEFAULT_MODE, step_budget=ParserConfig.STEP_BUDGET)


@dataclass(frozen=True)
class MoveRecord:
    """One trace line: stack (bottom first) and input after the action."""

    stack: Tuple[str, ...]
    remaining: Tuple[str, ...]
    action: str


@dataclass(frozen=True)
class RejectInfo:
    position: int
    stack_top: str
    expected: Tuple[str, ...]
    reason: str


@dataclass(frozen=True)
class ParseOutcome:
    verdict: str
    reject: Optional[RejectInfo] = None

    @property
    def accepted(self) -> bool:
        return self.verdict == ACCEPTED


@dataclass
class ParseTree:
    """
    Derivation tree node. Terminal leaves may carry the word they came from;
    an epsilon expansion has the single child `@eps`.
    """

    symbol: str
    children: List["ParseTree"] = field(default_factory=list)
    surface: Optional[str] = None


@dataclass(frozen=True)
class ParseResult:
    outcome: ParseOutcome
    moves: Tuple[MoveRecord, ...]
    tree: Optional[ParseTree] = None

    @property
    def accepted(self) -> bool:
        return self.outcome.accepted
