import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import pandas as pd
from tqdm import tqdm

from driver.model import UNKNOWN_TERMINAL, DriverPolicy, RejectInfo, UnknownTerminalError
from driver.predictive_parser import PredictiveParser
from table.model import ParseTable
from tagging.lexicon import Lexicon
from tagging.sentence_splitter import SentenceSplitter
from tagging.tagger import Tagger
from .corpus import RAW_SENTENCE, CorpusEntry

logger = logging.getLogger(__name__)

ACCEPT = "accept"
REJECT = "reject"
ERROR = "error"

STATUS_OK = "ok"
STATUS_MISMATCH = "MISMATCH"
STATUS_ERROR = "ERROR"

TOTAL_LABEL = "total"


@dataclass(frozen=True)
class BatchRecord:
    entry: CorpusEntry
    verdict: str
    tags: tuple = ()
    reject: Optional[RejectInfo] = None
    error: Optional[str] = None
    # sentence of a raw entry the reject refers to
    sentence: int = 0

    @property
    def matched(self) -> bool:
        return self.verdict == self.entry.expected

    @property
    def status(self) -> str:
        if self.error is not None:
            return STATUS_ERROR
        return STATUS_OK if self.matched else STATUS_MISMATCH


@dataclass(frozen=True)
class LabelResult:
    """Acceptance rate A = (D / I) * 100 for one sentence type."""

    label: str
    total: int
    accepted: int

    @property
    def rate(self) -> Optional[float]:
        if self.total == 0:
            return None
        return self.accepted / self.total * 100

    @property
    def rate_text(self) -> str:
        rate = self.rate
        return "n/a" if rate is None else f"{rate:.2f}%"


@dataclass(frozen=True)
class BatchReport:
    records: List[BatchRecord]
    labels: List[LabelResult] = field(default_factory=list)
    total: LabelResult = field(default_factory=lambda: LabelResult(TOTAL_LABEL, 0, 0))

    @property
    def all_matched(self) -> bool:
        return all(record.matched for record in self.records)


class BatchRunner:
    """
    Runs a corpus through the tagger and the predictive parser and tallies verdicts.
    """

    def __init__(self, table: ParseTable, lexicon: Optional[Lexicon] = None, policy: Optional[DriverPolicy] = None):
        self.parser = PredictiveParser(table)
        self.splitter = SentenceSplitter()
        self.tagger = Tagger()
        self.lexicon = lexicon
        self.policy = policy

    def run(self, entries: Sequence[CorpusEntry]) -> BatchReport:
        """
        Parse every corpus entry in order.

        A raw entry is split into sentences and counts as one unit: it is
        accepted only when every sentence is, and the first rejected sentence
        supplies the reject info. A tag that is not a grammar terminal
        rejects the entry with reason `unknown-terminal`. Any other failure
        while parsing one entry is recorded in its `error` field and the run
        goes on.

        Args:
            entries: Corpus entries

        Returns:
            BatchReport with one record per entry, in corpus order

        Raises:
            UnknownWordError: a raw sentence holds a word the lexicon lacks
        """
        records = []
        for entry in tqdm(entries, desc="Parsing corpus", unit="entry", disable=None):
            units = self._units(entry)
            tags = tuple(tag for unit_tags, _ in units for tag in unit_tags)
            try:
                records.append(self._parse_units(entry, units, tags))
            except Exception as e:
                logger.error(f"Error parsing corpus line {entry.line} ({entry.text!r}): {e}")
                records.append(BatchRecord(entry, ERROR, tags, error=str(e)))

        labels, total = self.summarize(records)
        mismatches = sum(1 for record in records if not record.matched)
        logger.info(f"Batch finished: {len(records)} entries, {mismatches} not matching their expected verdict")
        return BatchReport(records, labels, total)

    def summarize(self, records: Sequence[BatchRecord]):
        """
        Per-label and overall counts.

        Returns:
            (label results in first-appearance order, total result)
        """
        rows = [{"label": r.entry.label, "accepted": r.verdict == ACCEPT} for r in records]
        df = pd.DataFrame(rows, columns=["label", "accepted"])

        labels = []
        if not df.empty:
            grouped = df.groupby("label", sort=False)["accepted"].agg(["size", "sum"])
            for label, row in grouped.iterrows():
                labels.append(LabelResult(str(label), int(row["size"]), int(row["sum"])))

        total = LabelResult(TOTAL_LABEL, len(df), int(df["accepted"].sum()) if not df.empty else 0)
        return labels, total

    def format_text(self, report: BatchReport) -> str:
        """Per-entry lines `status<TAB>verdict<TAB>input`, then per-label and total rates."""
        lines = [f"{r.status}\t{r.verdict}\t{r.entry.text}" for r in report.records]
        for result in list(report.labels) + [report.total]:
            lines.append(f"{result.label}: I={result.total} D={result.accepted} A={result.rate_text}")
        return "\n".join(lines) + "\n"

    def to_json(self, report: BatchReport) -> Dict[str, Any]:
        sentences = []
        for r in report.records:
            record: Dict[str, Any] = {
                "input": r.entry.text,
                "kind": r.entry.kind,
                "label": r.entry.label,
                "expected": r.entry.expected,
                "verdict": r.verdict,
                "matched": r.matched,
                "tags": list(r.tags),
            }
            if r.reject is not None:
                record["reject"] = {
                    "sentence": r.sentence,
                    "position": r.reject.position,
                    "stack_top": r.reject.stack_top,
                    "expected": list(r.reject.expected),
                    "reason": r.reject.reason,
                }
            if r.error is not None:
                record["error"] = r.error
            sentences.append(record)

        per_type = [
            {"label": result.label, "I": result.total, "D": result.accepted, "A": result.rate}
            for result in list(report.labels) + [report.total]
        ]
        return {"per_type": per_type, "per_sentence": sentences, "all_matched": report.all_matched}

    def _parse_units(self, entry: CorpusEntry, units, tags: tuple) -> BatchRecord:
        for index, (unit_tags, surfaces) in enumerate(units):
            try:
                result = self.parser.parse(unit_tags, self.policy, surfaces)
            except UnknownTerminalError as e:
                logger.debug(f"Corpus line {entry.line}: {e}")
                reject = RejectInfo(e.position, "", (), UNKNOWN_TERMINAL)
                return BatchRecord(entry, REJECT, tags, reject, sentence=index)
            if not result.accepted:
                return BatchRecord(entry, REJECT, tags, result.outcome.reject, sentence=index)
        return BatchRecord(entry, ACCEPT, tags)

    def _units(self, entry: CorpusEntry) -> List[Tuple[List[str], Optional[List[str]]]]:
        """(tags, surfaces) per sentence; a tag sequence is a single unit."""
        if entry.kind != RAW_SENTENCE:
            return [(list(entry.payload), None)]
        if self.lexicon is None:
            raise ValueError(f"corpus line {entry.line} is a raw sentence but no lexicon was given")
        sentences = self.splitter.split(entry.payload) or [entry.payload]
        units = []
        for sentence in sentences:
            tagged = self.tagger.tag_sentence(self.lexicon, sentence)
            units.append((list(tagged.tags), tagged.surfaces))
        return units
