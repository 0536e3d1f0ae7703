import sys
import json
import logging
import argparse
from enum import IntEnum
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import colorlog

from analysis.set_analyzer import SetAnalyzer
from analysis.set_dump import SetDumpError, SetDumpFormatter, format_set
from casestudy.batch_runner import BatchRunner
from casestudy.config import CaseStudyConfig
from casestudy.consistency import ConsistencyChecker
from casestudy.corpus import CorpusFormatError, CorpusReader
from casestudy.loader import CaseStudyLoader
from driver.config import BACKTRACKING, DETERMINISTIC, ParserConfig
from driver.model import DriverPolicy, ParseResult, UnknownTerminalError
from driver.predictive_parser import PredictiveParser
from driver.trace_formatter import TraceFormatter
from grammar.errors import GrammarError, LeftRecursionError
from grammar.factoring import LeftFactorer
from grammar.model import Grammar
from grammar.reader import GrammarReader
from grammar.recursion import LeftRecursionDetector
from grammar.writer import GrammarWriter
from table.builder import TableBuilder
from table.model import ConflictEntry, ParseTable, TableFormatError, TableShapeError
from table.serializer import TableSerializer
from tagging.errors import LexiconError, UnknownWordError
from tagging.lexicon import Lexicon
from tagging.lexicon_loader import LexiconLoader
from tagging.sentence_splitter import SentenceSplitter
from tagging.tagger import Tagger

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(log_color)s%(levelname)s%(reset)s [%(name)s] %(message)s"

# `backtrack` is accepted as a short spelling of backtracking
POLICY_CHOICES = {DETERMINISTIC: DETERMINISTIC, BACKTRACKING: BACKTRACKING, "backtrack": BACKTRACKING}

INPUT_ERRORS = (
    OSError,
    LexiconError,
    UnknownWordError,
    UnknownTerminalError,
    TableFormatError,
    TableShapeError,
    SetDumpError,
    CorpusFormatError,
)


class ExitStatus(IntEnum):
    OK = 0
    REJECTED = 1
    USAGE = 2
    INPUT_ERROR = 3
    GRAMMAR_ERROR = 4


class UsageError(Exception):
    """Arguments parsed but do not make sense together."""


class GrammarToolkitApp:
    """
    Main application class that wires the grammar, table, tagging and parsing
    packages to the command-line subcommands. Every cmd_* method prints its
    result to stdout and returns an ExitStatus.
    """

    def __init__(self):
        self.grammar_reader = GrammarReader()
        self.grammar_writer = GrammarWriter()
        self.factorer = LeftFactorer()
        self.recursion_detector = LeftRecursionDetector()
        self.analyzer = SetAnalyzer()
        self.set_dump = SetDumpFormatter()
        self.table_builder = TableBuilder()
        self.table_serializer = TableSerializer()
        self.lexicon_loader = LexiconLoader()
        self.splitter = SentenceSplitter()
        self.tagger = Tagger()
        self.trace_formatter = TraceFormatter()
        self.case_loader = CaseStudyLoader()
        self.checker = ConsistencyChecker()
        self.corpus_reader = CorpusReader()

    def cmd_analyze(self, grammar_path: str) -> ExitStatus:
        grammar = self.grammar_reader.parse_file(grammar_path)
        first_sets, follow_sets = self.analyzer.analyze(grammar)
        unreachable = [grammar.name(n) for n in grammar.nonterminals if n not in grammar.reachable()]
        if unreachable:
            logger.info(f"Unreachable nonterminals: {', '.join(unreachable)}")
        self._emit(self.set_dump.format(grammar, first_sets, follow_sets))
        return ExitStatus.OK

    def cmd_factor(self, grammar_path: str) -> ExitStatus:
        grammar = self.grammar_reader.parse_file(grammar_path)
        self._emit(self.grammar_writer.serialize(self.factorer.left_factor(grammar)))
        return ExitStatus.OK

    def cmd_table(self, grammar_path: str, strict: bool = False, output_format: str = "text") -> ExitStatus:
        """
        Build the predictive table of a grammar and list its conflicts.

        Args:
            grammar_path: Grammar file
            strict: Exit with GRAMMAR_ERROR when any cell is conflicted
            output_format: text or json

        Returns:
            OK, or GRAMMAR_ERROR under strict with conflicts
        """
        grammar = self.grammar_reader.parse_file(grammar_path)
        table, conflicts = self._computed_table(grammar)
        name = Path(grammar_path).stem

        if output_format == "json":
            self._emit_json(self.table_serializer.to_json(table, conflicts, name))
        else:
            self._emit(self.table_serializer.serialize(table, name))
            self._emit(self.format_conflicts(grammar, conflicts))

        if strict and conflicts:
            logger.error(f"{len(conflicts)} conflicted cells; grammar is not LL(1)")
            return ExitStatus.GRAMMAR_ERROR
        return ExitStatus.OK

    def cmd_diff_paper(self) -> ExitStatus:
        case = self.case_loader.load()
        self._emit(self.checker.format_report(self.checker.report(case)))
        return ExitStatus.OK

    def cmd_parse(self, text: str, grammar_path: Optional[str] = None, table_path: Optional[str] = None,
                  lexicon_paths: Optional[Sequence[str]] = None, tags_given: bool = False,
                  policy: Optional[DriverPolicy] = None, trace: bool = False, tree: bool = False,
                  output_format: str = "text") -> ExitStatus:
        """
        Parse one sentence, or one tag sequence with tags_given.

        Returns:
            OK when accepted, REJECTED otherwise
        """
        grammar = self._grammar(grammar_path)
        table = self._table(grammar, table_path)

        surfaces = None
        if tags_given:
            tags = text.split()
        else:
            sentences = self.splitter.split(text)
            if len(sentences) > 1:
                raise UsageError(f"parse takes one sentence, got {len(sentences)}; use batch for running text")
            tagged = self.tagger.tag_sentence(self._lexicon(lexicon_paths), sentences[0] if sentences else "")
            tags, surfaces = list(tagged.tags), tagged.surfaces

        result = PredictiveParser(table).parse(tags, policy, surfaces)

        if output_format == "json":
            self._emit_json(self._parse_json(tags, result))
        else:
            lines = [self.verdict_line(result)]
            if trace:
                lines.append(self.trace_formatter.format_trace(result.moves))
            if tree and result.tree is not None:
                lines.append(self.trace_formatter.tree_to_bracketed(result.tree))
            self._emit("\n".join(lines) + "\n")

        return ExitStatus.OK if result.accepted else ExitStatus.REJECTED

    def cmd_tag(self, text: str, lexicon_paths: Optional[Sequence[str]] = None) -> ExitStatus:
        lexicon = self._lexicon(lexicon_paths)
        lines = []
        for sentence in self.splitter.split(text):
            tagged = self.tagger.tag_sentence(lexicon, sentence)
            lines.append(" ".join(f"{token.surface}/{tag}" for token, tag in zip(tagged.tokens, tagged.tags)))
        self._emit("".join(line + "\n" for line in lines))
        return ExitStatus.OK

    def cmd_batch(self, corpus_path: str, grammar_path: Optional[str] = None, table_path: Optional[str] = None,
                  lexicon_paths: Optional[Sequence[str]] = None, policy: Optional[DriverPolicy] = None,
                  output_format: str = "text") -> ExitStatus:
        """
        Run a corpus and report per-entry verdicts and acceptance rates.

        Returns:
            OK when every entry got its expected verdict, REJECTED otherwise
        """
        entries = self.corpus_reader.parse_file(corpus_path)
        grammar = self._grammar(grammar_path)
        table = self._table(grammar, table_path)
        runner = BatchRunner(table, self._lexicon(lexicon_paths), policy)
        report = runner.run(entries)

        if output_format == "json":
            self._emit_json(runner.to_json(report))
        else:
            self._emit(runner.format_text(report))

        if not report.all_matched:
            logger.warning("Some corpus entries did not get their expected verdict")
            return ExitStatus.REJECTED
        return ExitStatus.OK

    def verdict_line(self, result: ParseResult) -> str:
        """`accepted`, or `rejected: <reason> at token <i>, expected {...}`."""
        if result.accepted:
            return "accepted"
        reject = result.outcome.reject
        return f"rejected: {reject.reason} at token {reject.position}, expected {format_set(reject.expected)}"

    def format_conflicts(self, grammar: Grammar, conflicts: List[ConflictEntry]) -> str:
        lines = ["", f"CONFLICTS {len(conflicts)}"]
        for entry in conflicts:
            alternatives = " / ".join(grammar.rhs_text(grammar.productions[p]) for p in entry.productions)
            lines.append(f"{entry.kind}\t{entry.row}, {entry.col}\t{entry.row}->{alternatives}")
        return "\n".join(lines) + "\n"

    def _computed_table(self, grammar: Grammar) -> Tuple[ParseTable, List[ConflictEntry]]:
        cycles = self.recursion_detector.detect(grammar)
        if cycles:
            raise LeftRecursionError(cycles)
        return self.table_builder.build(grammar)

    def _grammar(self, grammar_path: Optional[str]) -> Grammar:
        if grammar_path is None:
            return self.case_loader.load_grammar()
        return self.grammar_reader.parse_file(grammar_path)

    def _table(self, grammar: Grammar, table_path: Optional[str]) -> ParseTable:
        if table_path is None:
            table, _ = self._computed_table(grammar)
            return table
        logger.info(f"Reading table file: {table_path}")
        return self.table_serializer.load(Path(table_path).read_text(encoding="utf-8"), grammar)

    def _lexicon(self, lexicon_paths: Optional[Sequence[str]]) -> Lexicon:
        if not lexicon_paths:
            return self.case_loader.load_lexicon()
        lexicon = self.lexicon_loader.load_file(lexicon_paths[0])
        for path in lexicon_paths[1:]:
            lexicon = lexicon.merge(self.lexicon_loader.load_file(path))
        return lexicon

    def _parse_json(self, tags: List[str], result: ParseResult) -> Dict[str, Any]:
        reject = result.outcome.reject
        return {
            "verdict": result.outcome.verdict,
            "tags": tags,
            "reject": None if reject is None else {
                "position": reject.position,
                "stack_top": reject.stack_top,
                "expected": list(reject.expected),
                "reason": reject.reason,
            },
            "moves": [
                {"stack": list(move.stack), "input": list(move.remaining), "action": move.action}
                for move in result.moves
            ],
            "tree": None if result.tree is None else self.trace_formatter.tree_to_dict(result.tree),
        }

    def _emit(self, text: str):
        sys.stdout.write(text)

    def _emit_json(self, data: Dict[str, Any]):
        sys.stdout.write(json.dumps(data, indent=2, ensure_ascii=False) + "\n")


def setup_logging(level: int = logging.WARNING):
    """Send log records to stderr through a colorlog formatter, replacing any earlier handler."""
    root = logging.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, "toolkit_handler", False):
            root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(colorlog.ColoredFormatter(LOG_FORMAT))
    handler.toolkit_handler = True
    root.addHandler(handler)
    root.setLevel(level)


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ll1", description="LL(1) grammar toolkit with a Bangla case study.")
    parser.add_argument("--verbose", action="store_true", help="Log debug output to stderr")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    analyze = commands.add_parser("analyze", help="Print FIRST and FOLLOW sets")
    analyze.add_argument("grammar", help="Grammar file")

    factor = commands.add_parser("factor", help="Print the left-factored grammar")
    factor.add_argument("grammar", help="Grammar file")

    table = commands.add_parser("table", help="Print the predictive table and its conflicts")
    table.add_argument("grammar", help="Grammar file")
    table.add_argument("--strict", action="store_true", help="Exit 4 when the table has conflicts")
    table.add_argument("--format", choices=["text", "json"], default="text")

    diff = commands.add_parser("diff-paper", help="Compare the published Bangla artifacts with computed ones")
    diff.add_argument("--data", help="Folder holding the case-study fixtures")

    parse = commands.add_parser("parse", help="Parse one sentence or tag sequence")
    parse.add_argument("input", help="Sentence text, or tags with --tags")
    parse.add_argument("--tags", action="store_true", help="Input is a space-separated tag sequence")
    parse.add_argument("--trace", action="store_true", help="Append the move trace")
    parse.add_argument("--tree", action="store_true", help="Append the bracketed parse tree when accepted")
    _add_run_arguments(parse)

    tag = commands.add_parser("tag", help="Tag the words of raw text")
    tag.add_argument("input", help="Sentence text")
    tag.add_argument("--lexicon", action="append", help="Lexicon file (.xml or .tsv); repeatable")

    batch = commands.add_parser("batch", help="Run a corpus and report acceptance rates")
    batch.add_argument("corpus", help="Corpus file")
    _add_run_arguments(batch)

    return parser


def _add_run_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--grammar", help="Grammar file (default: the Bangla case-study grammar)")
    parser.add_argument("--table", help="Table file to run instead of the table computed from the grammar")
    parser.add_argument("--lexicon", action="append", help="Lexicon file (.xml or .tsv); repeatable")
    parser.add_argument("--policy", choices=sorted(POLICY_CHOICES), default=None, help="Driver mode")
    parser.add_argument("--budget", type=int, default=None, help="Expansion budget per parse")
    parser.add_argument("--format", choices=["text", "json"], default="text")


def _policy(args: argparse.Namespace) -> DriverPolicy:
    """Apply --budget and --policy to ParserConfig and return the resulting default policy."""
    if args.budget is not None:
        try:
            ParserConfig.set_step_budget(args.budget)
        except ValueError as e:
            raise UsageError(f"--budget: {e}") from e
    if args.policy:
        ParserConfig.set_default_mode(POLICY_CHOICES[args.policy])
    return DriverPolicy.default()


def run_command(app: GrammarToolkitApp, args: argparse.Namespace) -> ExitStatus:
    if args.command == "analyze":
        return app.cmd_analyze(args.grammar)
    if args.command == "factor":
        return app.cmd_factor(args.grammar)
    if args.command == "table":
        return app.cmd_table(args.grammar, args.strict, args.format)
    if args.command == "diff-paper":
        if args.data:
            CaseStudyConfig.set_data_folder(args.data)
        return app.cmd_diff_paper()
    if args.command == "parse":
        return app.cmd_parse(args.input, args.grammar, args.table, args.lexicon, args.tags,
                             _policy(args), args.trace, args.tree, args.format)
    if args.command == "tag":
        return app.cmd_tag(args.input, args.lexicon)
    if args.command == "batch":
        return app.cmd_batch(args.corpus, args.grammar, args.table, args.lexicon, _policy(args), args.format)
    raise UsageError(f"unknown command {args.command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Command-line entry point.

    Args:
        argv: Arguments without the program name; sys.argv when omitted

    Returns:
        ExitStatus code
    """
    parser = build_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return ExitStatus.OK if e.code == 0 else ExitStatus.USAGE

    setup_logging(logging.DEBUG if args.verbose else logging.WARNING)

    try:
        return int(run_command(GrammarToolkitApp(), args))
    except UsageError as e:
        logger.error(str(e))
        return ExitStatus.USAGE
    except GrammarError as e:
        logger.error(f"Grammar error: {e}")
        return ExitStatus.GRAMMAR_ERROR
    except INPUT_ERRORS as e:
        logger.error(f"Input error: {e}")
        return ExitStatus.INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
