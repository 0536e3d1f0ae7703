"""
Exceptions raised while loading or transforming grammars.
"""

from typing import Optional, Sequence


class GrammarError(ValueError):
    """Base class for every grammar problem the toolkit reports."""


class GrammarSyntaxError(GrammarError):
    """Grammar text does not follow the `LHS -> alt | alt ;` format."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class DuplicateProductionError(GrammarError):
    """The same production was declared twice."""

    def __init__(self, lhs: str, rhs: Sequence[str], line: Optional[int] = None):
        body = " ".join(rhs) if rhs else "@eps"
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}duplicate production {lhs} -> {body}")
        self.lhs = lhs
        self.rhs = tuple(rhs)
        self.line = line


class EmptyGrammarError(GrammarError):
    """Grammar text contained no rules."""


class LeftRecursionError(GrammarError):
    """Grammar is left recursive, so a predictive table would be meaningless."""

    def __init__(self, cycles: Sequence[Sequence[str]]):
        rendered = "; ".join("[" + ", ".join(cycle) + "]" for cycle in cycles)
        super().__init__(f"left recursion detected: {rendered}")
        self.cycles = [list(cycle) for cycle in cycles]
