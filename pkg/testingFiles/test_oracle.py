import pytest
from hypothesis import given, settings

from analysis.oracle import DerivationOracle, OracleBudgetError
from analysis.set_analyzer import SetAnalyzer
from conftest import grammars
from driver.config import ParserConfig
from grammar.model import END_ID, Grammar
from grammar.reader import GrammarReader

reader = GrammarReader()
analyzer = SetAnalyzer()


def test_single_terminal():
    grammar = reader.parse_text("A -> a ;")
    first_sets = DerivationOracle(depth=4).first_sets(grammar)

    assert first_sets.of(grammar.id_of("A")) == frozenset({grammar.id_of("a")})
    assert first_sets.nullable == frozenset()


def test_nonproductive_cycle():
    grammar = reader.parse_text("A -> B ;\nB -> A ;")
    first_sets = DerivationOracle(depth=10).first_sets(grammar)

    assert first_sets.of(grammar.id_of("A")) == frozenset()
    assert not first_sets.is_nullable(grammar.id_of("A"))
    assert first_sets == analyzer.compute_first(grammar)


def test_follow_simple_cases():
    grammar = reader.parse_text("S -> A b ;\nA -> a ;")
    assert DerivationOracle(depth=4).follow_sets(grammar).of(grammar.id_of("A")) == frozenset({grammar.id_of("b")})

    grammar = reader.parse_text("S -> A ;\nA -> a ;")
    assert DerivationOracle(depth=4).follow_sets(grammar).of(grammar.id_of("A")) == frozenset({END_ID})


def test_bangla_sets_match_fixpoint(bangla_grammar):
    oracle = DerivationOracle(depth=ParserConfig.ORACLE_DEPTH, form_cap=ParserConfig.ORACLE_FORM_CAP)
    first_sets, follow_sets = analyzer.analyze(bangla_grammar)

    assert oracle.first_sets(bangla_grammar) == first_sets
    assert oracle.follow_sets(bangla_grammar) == follow_sets


def test_expression_grammar_sets_match_fixpoint(expression_grammar):
    oracle = DerivationOracle(depth=ParserConfig.ORACLE_DEPTH)
    first_sets, follow_sets = analyzer.analyze(expression_grammar)

    assert oracle.first_sets(expression_grammar) == first_sets
    assert oracle.follow_sets(expression_grammar) == follow_sets


def test_form_cap():
    grammar = reader.parse_text("S -> A B C ;\nA -> a | @eps ;\nB -> b | @eps ;\nC -> c | @eps ;")

    with pytest.raises(OracleBudgetError):
        DerivationOracle(depth=10, form_cap=2).first_sets(grammar)


def test_too_many_nonterminals():
    rules = [(f"N{i}", (f"N{i + 1}",)) for i in range(20)] + [("N20", ("a",))]

    with pytest.raises(OracleBudgetError):
        DerivationOracle(depth=4).first_sets(Grammar.from_rules(rules))


def test_depth_must_be_positive():
    with pytest.raises(ValueError):
        DerivationOracle(depth=0)


@settings(max_examples=100, deadline=None)
@given(grammars(max_nonterminals=6, max_terminals=4, max_rhs=4))
def test_first_sets_match_oracle(grammar):
    assert DerivationOracle(ParserConfig.ORACLE_DEPTH, ParserConfig.ORACLE_FORM_CAP).first_sets(grammar) == analyzer.compute_first(grammar)


@settings(max_examples=100, deadline=None)
@given(grammars(max_nonterminals=6, max_terminals=4, max_rhs=4))
def test_follow_sets_match_oracle(grammar):
    first_sets = analyzer.compute_first(grammar)

    assert DerivationOracle(ParserConfig.ORACLE_DEPTH, ParserConfig.ORACLE_FORM_CAP).follow_sets(grammar) == analyzer.compute_follow(grammar, first_sets)
