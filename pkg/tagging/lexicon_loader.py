import re
import logging
from pathlib import Path
from typing import List, Optional, Tuple

from .errors import LexiconError
from .lexicon import Lexicon

logger = logging.getLogger(__name__)

NAME = r"[^\s<>/=&\"'!?]+"
PROLOG_PATTERN = re.compile(r"<\?.*?\?>", re.DOTALL)
COMMENT_PATTERN = re.compile(r"<!--.*?-->", re.DOTALL)
ROOT_PATTERN = re.compile(rf"<(?P<name>{NAME})\s*(?P<empty>/?)>")
OPEN_PATTERN = re.compile(rf"<(?P<name>{NAME})(?P<attrs>[^>]*?)(?P<empty>/?)>")
CLOSE_PATTERN = re.compile(rf"</(?P<name>{NAME})\s*>")
ENTITY_PATTERN = re.compile(r"&([^;\s]*);")
ENTITIES = {"lt": "<", "gt": ">", "amp": "&"}


class LexiconLoader:
    """
    Loads lexicons from the flat XML shape (`<WORD><আমি>pronoun</আমি>...</WORD>`)
    or from `word<TAB>tag` lines.
    """

    def __init__(self):
        pass

    def load_file(self, path: str) -> Lexicon:
        """
        Load a lexicon file, choosing the reader by extension (`.xml` or TSV).

        Args:
            path: Path to a UTF-8 lexicon file

        Returns:
            Loaded lexicon
        """
        logger.info(f"Reading lexicon file: {path}")
        text = Path(path).read_text(encoding="utf-8")
        if Path(path).suffix.lower() == ".xml":
            return self.load_xml(text)
        return self.load_tsv(text)

    def load_tsv(self, text: str) -> Lexicon:
        """
        Read `word<TAB>tag` lines; `#` starts a comment and blank lines are skipped.

        Args:
            text: TSV lexicon text

        Returns:
            Loaded lexicon
        """
        pairs: List[Tuple[str, str, Optional[int]]] = []
        for line_number, line in enumerate(text.splitlines(), 1):
            body = line.split("#", 1)[0].strip()
            if not body:
                continue
            fields = [field.strip() for field in body.split("\t")]
            if len(fields) != 2:
                raise LexiconError(f"expected 'word<TAB>tag', found {line.strip()!r}", line_number)
            pairs.append((fields[0], fields[1], line_number))

        lexicon = Lexicon.from_pairs(pairs)
        logger.info(f"Loaded {len(lexicon)} TSV lexicon entries")
        return lexicon

    def load_xml(self, text: str) -> Lexicon:
        """
        Read the flat XML lexicon shape.

        The prolog and comments are skipped (a declared encoding is ignored,
        the text is already decoded). The root element may have any name;
        each child element names a word and its text is the word's tag.
        Children cannot carry attributes or nest, and only `&lt;`, `&gt;` and
        `&amp;` are understood.

        Args:
            text: XML document text

        Returns:
            Loaded lexicon
        """
        pos = self._skip_misc(text, 0, allow_prolog=True)
        root = ROOT_PATTERN.match(text, pos)
        if root is None:
            raise LexiconError("expected the root element", self._line(text, pos))
        pos = root.end()
        root_name = root.group("name")

        pairs: List[Tuple[str, str, Optional[int]]] = []
        if not root.group("empty"):
            pos = self._read_children(text, pos, root_name, pairs)

        pos = self._skip_misc(text, pos, allow_prolog=False)
        if pos != len(text):
            raise LexiconError("content after the root element", self._line(text, pos))

        lexicon = Lexicon.from_pairs(pairs)
        logger.info(f"Loaded {len(lexicon)} XML lexicon entries from <{root_name}>")
        return lexicon

    def _read_children(self, text: str, pos: int, root_name: str, pairs: List[Tuple[str, str, Optional[int]]]) -> int:
        while True:
            pos = self._skip_misc(text, pos, allow_prolog=False)
            if pos >= len(text):
                raise LexiconError(f"<{root_name}> is never closed", self._line(text, pos))

            close = CLOSE_PATTERN.match(text, pos)
            if close is not None:
                if close.group("name") != root_name:
                    raise LexiconError(f"</{close.group('name')}> does not close <{root_name}>", self._line(text, pos))
                return close.end()

            opened = OPEN_PATTERN.match(text, pos)
            if opened is None:
                raise LexiconError("expected an element", self._line(text, pos))
            word = opened.group("name")
            line = self._line(text, pos)
            if opened.group("attrs").strip():
                raise LexiconError(f"<{word}> has attributes, which the lexicon format does not allow", line)
            if opened.group("empty"):
                raise LexiconError(f"empty tag for {word!r}", line)

            end = text.find("<", opened.end())
            if end < 0:
                raise LexiconError(f"<{word}> is never closed", line)
            close = CLOSE_PATTERN.match(text, end)
            if close is None:
                raise LexiconError(f"<{word}> contains a nested element", self._line(text, end))
            if close.group("name") != word:
                raise LexiconError(f"</{close.group('name')}> does not close <{word}>", self._line(text, end))

            tag = self._unescape(text[opened.end():end], line).strip()
            pairs.append((word, tag, line))
            pos = close.end()

    def _skip_misc(self, text: str, pos: int, allow_prolog: bool) -> int:
        while True:
            if pos == 0 and text.startswith("\ufeff"):
                pos = 1
            while pos < len(text) and text[pos].isspace():
                pos += 1
            comment = COMMENT_PATTERN.match(text, pos)
            if comment is not None:
                pos = comment.end()
                continue
            prolog = PROLOG_PATTERN.match(text, pos) if allow_prolog else None
            if prolog is not None:
                pos = prolog.end()
                continue
            if pos < len(text) and text[pos] != "<":
                raise LexiconError(f"unexpected text {text[pos:pos + 20]!r}", self._line(text, pos))
            return pos

    def _unescape(self, value: str, line: int) -> str:
        def replace(match):
            entity = match.group(1)
            if entity not in ENTITIES:
                raise LexiconError(f"unsupported entity '&{entity};'", line)
            return ENTITIES[entity]

        return ENTITY_PATTERN.sub(replace, value)

    def _line(self, text: str, pos: int) -> int:
        return text.count("\n", 0, pos) + 1
