"""
Exceptions raised while loading lexicons and tagging sentences.
"""

from typing import Optional


class LexiconError(ValueError):
    """Lexicon text is malformed or maps one word to two tags."""

    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class UnknownWordError(LookupError):
    """A token of the sentence has no lexicon entry."""

    def __init__(self, surface: str, position: int):
        super().__init__(f"unknown word {surface!r} at token {position}")
        self.surface = surface
        self.position = position

    def __str__(self) -> str:
        return self.args[0]
