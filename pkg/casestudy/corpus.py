import re
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import List, Tuple, Union

logger = logging.getLogger(__name__)

RAW_SENTENCE = "raw-sentence"
TAG_SEQUENCE = "tag-sequence"
KIND_CODES = {"S": RAW_SENTENCE, "T": TAG_SEQUENCE}
VERDICTS = ("accept", "reject")
DEFAULT_LABEL = "default"

LABEL_PATTERN = re.compile(r"^#\s*label:\s*(?P<label>\S.*?)\s*$")


class CorpusFormatError(ValueError):
    """A corpus line does not follow `S|T<TAB>accept|reject<TAB>payload`."""


@dataclass(frozen=True)
class CorpusEntry:
    kind: str
    payload: Union[str, Tuple[str, ...]]
    expected: str
    provenance: str
    label: str = DEFAULT_LABEL
    line: int = 0

    @property
    def text(self) -> str:
        """The payload as written in the corpus file."""
        if self.kind == TAG_SEQUENCE:
            return " ".join(self.payload)
        return self.payload


class CorpusReader:
    """
    Reads accept/reject corpora.

    `S<TAB>expected<TAB>sentence` is a raw sentence, `T<TAB>expected<TAB>tags`
    a tag sequence. `# label: <name>` sets the label of the entries after it;
    other comments directly above an entry become its provenance.
    """

    def __init__(self):
        pass

    def parse_file(self, path: str) -> List[CorpusEntry]:
        logger.info(f"Reading corpus file: {path}")
        return self.parse_text(Path(path).read_text(encoding="utf-8"))

    def parse_text(self, text: str) -> List[CorpusEntry]:
        """
        Parse corpus text.

        Args:
            text: Corpus file contents

        Returns:
            Entries in file order
        """
        entries: List[CorpusEntry] = []
        label = DEFAULT_LABEL
        notes: List[str] = []

        for line_number, line in enumerate(text.splitlines(), 1):
            stripped = line.strip()
            if not stripped:
                notes = []
                continue
            if stripped.startswith("#"):
                match = LABEL_PATTERN.match(stripped)
                if match is not None:
                    label = match.group("label")
                    notes = []
                else:
                    note = stripped.lstrip("#").strip()
                    if note:
                        notes.append(note)
                continue

            entries.append(self._entry(line, line_number, label, "; ".join(notes)))
            notes = []

        logger.info(f"Read {len(entries)} corpus entries")
        return entries

    def _entry(self, line: str, line_number: int, label: str, provenance: str) -> CorpusEntry:
        fields = line.split("\t")
        if len(fields) != 3:
            raise CorpusFormatError(f"line {line_number}: expected 3 tab-separated fields, found {len(fields)}")
        code, expected, payload = (field.strip() for field in fields)
        if code not in KIND_CODES:
            raise CorpusFormatError(f"line {line_number}: entry kind must be S or T, found {code!r}")
        if expected not in VERDICTS:
            raise CorpusFormatError(f"line {line_number}: expected verdict must be accept or reject, found {expected!r}")

        kind = KIND_CODES[code]
        value: Union[str, Tuple[str, ...]] = tuple(payload.split()) if kind == TAG_SEQUENCE else payload
        return CorpusEntry(kind, value, expected, provenance, label, line_number)
