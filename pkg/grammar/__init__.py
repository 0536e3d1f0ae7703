"""
Grammar package: context-free grammar model, text format, left factoring and left-recursion checks.
"""

from .model import END_ID, END_MARKER, EPSILON, Grammar, Production, Symbol
from .errors import (
    DuplicateProductionError,
    EmptyGrammarError,
    GrammarError,
    GrammarSyntaxError,
    LeftRecursionError,
)
from .reader import GrammarReader
from .writer import GrammarWriter
from .factoring import LeftFactorer, PrefixGroup
from .recursion import LeftRecursionDetector

__all__ = [
    'Grammar', 'Production', 'Symbol', 'EPSILON', 'END_MARKER', 'END_ID',
    'GrammarError', 'GrammarSyntaxError', 'DuplicateProductionError', 'EmptyGrammarError', 'LeftRecursionError',
    'GrammarReader', 'GrammarWriter', 'LeftFactorer', 'PrefixGroup', 'LeftRecursionDetector',
]
