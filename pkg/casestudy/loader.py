import logging
from dataclasses import dataclass
from typing import List

from analysis.set_analyzer import SetAnalyzer
from analysis.set_dump import DumpedSets, SetDumpFormatter
from analysis.sets import FirstSets, FollowSets
from grammar.model import Grammar
from grammar.reader import GrammarReader
from table.builder import TableBuilder
from table.model import ConflictEntry, ParseTable
from table.serializer import TableSerializer
from tagging.lexicon import Lexicon
from tagging.lexicon_loader import LexiconLoader
from .config import CaseStudyConfig
from .corpus import CorpusEntry, CorpusReader

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CaseStudy:
    grammar: Grammar
    first_sets: FirstSets
    follow_sets: FollowSets
    computed_table: ParseTable
    computed_conflicts: List[ConflictEntry]
    transcribed_table: ParseTable
    lexicon: Lexicon
    corpus: List[CorpusEntry]
    published_first: DumpedSets
    published_follow: DumpedSets


class CaseStudyLoader:
    """
    Loads the Bangla grammar, its published table and sets, the lexicon and the corpus.
    """

    def __init__(self):
        self.grammar_reader = GrammarReader()
        self.analyzer = SetAnalyzer()
        self.table_builder = TableBuilder()
        self.table_serializer = TableSerializer()
        self.lexicon_loader = LexiconLoader()
        self.corpus_reader = CorpusReader()
        self.set_dump = SetDumpFormatter()

    def load_grammar(self) -> Grammar:
        return self.grammar_reader.parse_file(str(CaseStudyConfig.path(CaseStudyConfig.GRAMMAR_FILE)))

    def load_lexicon(self) -> Lexicon:
        """Both lexicon files merged; they must agree on shared words."""
        xml = self.lexicon_loader.load_file(str(CaseStudyConfig.path(CaseStudyConfig.LEXICON_XML_FILE)))
        tsv = self.lexicon_loader.load_file(str(CaseStudyConfig.path(CaseStudyConfig.LEXICON_TSV_FILE)))
        return xml.merge(tsv)

    def load(self) -> CaseStudy:
        """
        Load every fixture.

        Returns:
            CaseStudy with the grammar, its computed sets and table, the
            published table loaded against the grammar, the published sets,
            the merged lexicon and the corpus
        """
        grammar = self.load_grammar()
        first_sets, follow_sets = self.analyzer.analyze(grammar)
        computed_table, conflicts = self.table_builder.build_table(grammar, first_sets, follow_sets)

        table_text = CaseStudyConfig.path(CaseStudyConfig.PUBLISHED_TABLE_FILE).read_text(encoding="utf-8")
        transcribed_table = self.table_serializer.load(table_text, grammar)

        published_first, _ = self.set_dump.parse(
            CaseStudyConfig.path(CaseStudyConfig.PUBLISHED_FIRST_FILE).read_text(encoding="utf-8")
        )
        _, published_follow = self.set_dump.parse(
            CaseStudyConfig.path(CaseStudyConfig.PUBLISHED_FOLLOW_FILE).read_text(encoding="utf-8")
        )

        lexicon = self.load_lexicon()
        corpus = self.corpus_reader.parse_file(str(CaseStudyConfig.path(CaseStudyConfig.CORPUS_FILE)))

        logger.info(
            f"Case study loaded: {len(grammar.productions)} productions, {len(conflicts)} computed conflicts, "
            f"{len(transcribed_table.synthetic)} synthetic productions, {len(lexicon)} words, {len(corpus)} corpus entries"
        )
        return CaseStudy(
            grammar=grammar,
            first_sets=first_sets,
            follow_sets=follow_sets,
            computed_table=computed_table,
            computed_conflicts=conflicts,
            transcribed_table=transcribed_table,
            lexicon=lexicon,
            corpus=corpus,
            published_first=published_first,
            published_follow=published_follow,
        )
