"""
Case-study package: the Bangla grammar fixtures, the corpus, the consistency report and batch runs.
"""

from .config import CaseStudyConfig
from .corpus import RAW_SENTENCE, TAG_SEQUENCE, CorpusEntry, CorpusFormatError, CorpusReader
from .loader import CaseStudy, CaseStudyLoader
from .consistency import ConsistencyChecker, ConsistencyFinding
from .batch_runner import BatchRecord, BatchReport, BatchRunner, LabelResult

__all__ = [
    'CaseStudyConfig',
    'CorpusEntry', 'CorpusFormatError', 'CorpusReader', 'RAW_SENTENCE', 'TAG_SEQUENCE',
    'CaseStudy', 'CaseStudyLoader',
    'ConsistencyChecker', 'ConsistencyFinding',
    'BatchRecord', 'BatchReport', 'BatchRunner', 'LabelResult',
]
