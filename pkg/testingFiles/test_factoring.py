from hypothesis import given, settings

from conftest import grammars
from grammar.factoring import LeftFactorer, PrefixGroup, longest_common_prefix
from grammar.reader import GrammarReader
from grammar.writer import GrammarWriter
from oracles import language_up_to

reader = GrammarReader()
writer = GrammarWriter()
factorer = LeftFactorer()

VP_EXCERPT = "VP -> noun verb | noun verb verb ;"


def test_longest_common_prefix():
    assert longest_common_prefix([("a", "b", "c"), ("a", "b"), ("a", "b", "d")]) == ("a", "b")
    assert longest_common_prefix([("a",), ("b",)]) == ()


def test_simple_factoring():
    factored = factorer.left_factor(reader.parse_text("A -> a b | a c ;"))

    assert writer.serialize(factored) == "A -> a A1 ;\nA1 -> b | c ;\n"


def test_no_shared_prefix_returns_grammar_unchanged():
    grammar = reader.parse_text("A -> a B | b ;\nB -> c | d ;")

    assert factorer.left_factor(grammar) is grammar


def test_vp_excerpt_factoring():
    grammar = reader.parse_text(VP_EXCERPT)
    factored = factorer.left_factor(grammar)

    assert factored.rules() == [("VP", ("noun", "verb", "VP1")), ("VP1", ()), ("VP1", ("verb",))]
    assert language_up_to(factored, 4) == language_up_to(grammar, 4)


def test_vp_excerpt_prefix_report():
    report = factorer.common_prefix_report(reader.parse_text(VP_EXCERPT))

    assert report == [PrefixGroup("VP", ("noun", "verb"), (0, 1))]


def test_prefix_report_simple():
    report = factorer.common_prefix_report(reader.parse_text("A -> a b | a c ;"))

    assert report == [PrefixGroup("A", ("a",), (0, 1))]


def test_fresh_names_skip_existing_symbols():
    grammar = reader.parse_text("A -> a A1 | a b ;\nA1 -> c ;")
    factored = factorer.left_factor(grammar)

    assert factored.rules() == [("A", ("a", "A2")), ("A1", ("c",)), ("A2", ("A1",)), ("A2", ("b",))]


def test_nested_prefixes_factor_to_fixpoint():
    grammar = reader.parse_text("A -> a b c | a b d | a e ;")
    factored = factorer.left_factor(grammar)

    assert factorer.common_prefix_report(factored) == []
    assert language_up_to(factored, 5) == language_up_to(grammar, 5)


def test_bangla_grammar_is_already_factored(bangla_grammar):
    assert factorer.common_prefix_report(bangla_grammar) == []


@settings(max_examples=50, deadline=None)
@given(grammars(max_nonterminals=4, max_terminals=3, max_rhs=3, max_alternatives=3))
def test_factored_grammar_has_no_common_prefixes(grammar):
    factored = factorer.left_factor(grammar)

    assert factorer.common_prefix_report(factored) == []


@settings(max_examples=50, deadline=None)
@given(grammars(max_nonterminals=4, max_terminals=3, max_rhs=3, max_alternatives=3))
def test_factoring_is_idempotent(grammar):
    factored = factorer.left_factor(grammar)

    assert factorer.left_factor(factored).rules() == factored.rules()


@settings(max_examples=50, deadline=None)
@given(grammars(max_nonterminals=4, max_terminals=3, max_rhs=3, max_alternatives=3))
def test_factoring_preserves_short_sentences(grammar):
    factored = factorer.left_factor(grammar)

    assert language_up_to(factored, 5) == language_up_to(grammar, 5)
