"""
Tagging package: word to POS lexicons, sentence splitting and sentence tagging.
"""

from .errors import LexiconError, UnknownWordError
from .lexicon import Lexicon
from .lexicon_loader import LexiconLoader
from .sentence_splitter import SentenceSplitter
from .tagger import TaggedSentence, Tagger, Token

__all__ = [
    'Lexicon', 'LexiconLoader', 'LexiconError', 'UnknownWordError',
    'SentenceSplitter', 'Tagger', 'Token', 'TaggedSentence',
]
