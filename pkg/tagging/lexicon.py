from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from .errors import LexiconError


@dataclass(frozen=True)
class Lexicon:
    """Word to POS tag dictionary; one tag per word."""

    entries: Dict[str, str]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[str, str, Optional[int]]]) -> "Lexicon":
        """
        Build a lexicon from (word, tag, line) triples.

        Repeating a word with the same tag is harmless; repeating it with
        another tag raises LexiconError naming the line of the repeat.
        """
        entries: Dict[str, str] = {}
        for word, tag, line in pairs:
            if not word:
                raise LexiconError("empty word", line)
            if not tag:
                raise LexiconError(f"empty tag for {word!r}", line)
            known = entries.get(word)
            if known is not None and known != tag:
                raise LexiconError(f"{word!r} tagged both {known!r} and {tag!r}", line)
            entries[word] = tag
        return cls(entries=entries)

    def lookup(self, word: str) -> Optional[str]:
        return self.entries.get(word)

    def tags(self) -> List[str]:
        """Distinct tags in order of first use."""
        return list(dict.fromkeys(self.entries.values()))

    def merge(self, other: "Lexicon") -> "Lexicon":
        """Union of two lexicons; a word tagged differently in each is an error."""
        pairs = [(w, t, None) for w, t in self.entries.items()]
        pairs.extend((w, t, None) for w, t in other.entries.items())
        return Lexicon.from_pairs(pairs)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, word: str) -> bool:
        return word in self.entries
