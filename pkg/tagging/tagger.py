import logging
from dataclasses import dataclass
from typing import List, Tuple

from .errors import UnknownWordError
from .lexicon import Lexicon
from .sentence_splitter import TERMINATORS

logger = logging.getLogger(__name__)

EDGE_PUNCTUATION = "\"'“”‘’,;:" + TERMINATORS


@dataclass(frozen=True)
class Token:
    surface: str
    position: int


@dataclass(frozen=True)
class TaggedSentence:
    tokens: Tuple[Token, ...]
    tags: Tuple[str, ...]

    @property
    def surfaces(self) -> List[str]:
        return [token.surface for token in self.tokens]


class Tagger:
    """
    Maps the words of one sentence to lexicon tags.
    """

    def __init__(self):
        pass

    def tokenize(self, sentence: str) -> List[Token]:
        """Whitespace tokens with quotes, commas and terminators trimmed off their edges."""
        tokens = []
        for raw in sentence.split():
            surface = raw.strip(EDGE_PUNCTUATION)
            if surface:
                tokens.append(Token(surface, len(tokens)))
        return tokens

    def tag_sentence(self, lexicon: Lexicon, sentence: str) -> TaggedSentence:
        """
        Tag every token of a sentence.

        Args:
            lexicon: Word to tag dictionary
            sentence: One sentence of raw text

        Returns:
            Tokens with their tags

        Raises:
            UnknownWordError: for the first token missing from the lexicon
        """
        tokens = self.tokenize(sentence)
        tags = []
        for token in tokens:
            tag = lexicon.lookup(token.surface)
            if tag is None:
                logger.error(f"No lexicon entry for {token.surface!r} (token {token.position})")
                raise UnknownWordError(token.surface, token.position)
            tags.append(tag)
        logger.debug(f"Tagged {len(tokens)} tokens: {' '.join(tags)}")
        return TaggedSentence(tokens=tuple(tokens), tags=tuple(tags))
