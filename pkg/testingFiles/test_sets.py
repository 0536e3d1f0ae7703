import pytest

from analysis.set_analyzer import SetAnalyzer
from analysis.set_dump import SetDumpError, SetDumpFormatter, format_set
from grammar.model import END_ID
from grammar.reader import GrammarReader

reader = GrammarReader()
analyzer = SetAnalyzer()
dump = SetDumpFormatter()


def first_names(grammar, first_sets, name):
    return {grammar.name(t) for t in first_sets.of(grammar.id_of(name))}


def follow_names(grammar, follow_sets, name):
    return {grammar.name(t) for t in follow_sets.of(grammar.id_of(name))}


@pytest.fixture(scope="module")
def bangla_sets(bangla_grammar):
    return SetAnalyzer().analyze(bangla_grammar)


def test_bangla_nullable(bangla_grammar):
    nullable = analyzer.compute_nullable(bangla_grammar)

    assert {bangla_grammar.name(n) for n in nullable} == {
        "NP", "NP1", "NP2", "NP3", "AP1", "AP2", "VP2", "VP3",
    }


def test_no_nullable_without_epsilon():
    assert analyzer.compute_nullable(reader.parse_text("A -> a ;")) == frozenset()


def test_bangla_first_sets_printed_alike(bangla_grammar, bangla_sets):
    first_sets, _ = bangla_sets

    assert first_names(bangla_grammar, first_sets, "AP") == {"adjective"}
    assert first_names(bangla_grammar, first_sets, "AP2") == {"ptrn"}
    assert first_sets.is_nullable(bangla_grammar.id_of("AP2"))
    assert first_names(bangla_grammar, first_sets, "NP3") == {"conjunction", "aw"}
    assert first_sets.is_nullable(bangla_grammar.id_of("NP3"))


def test_bangla_first_of_np_reaches_ip(bangla_grammar, bangla_sets):
    first_sets, _ = bangla_sets

    assert first_names(bangla_grammar, first_sets, "NP") == {
        "adjective", "conjunction", "ip", "modifier", "noun", "pronoun", "tp", "xp",
    }
    assert first_sets.is_nullable(bangla_grammar.id_of("NP"))
    assert "verb" in first_names(bangla_grammar, first_sets, "S")


def test_bangla_follow_sets(bangla_grammar, bangla_sets):
    _, follow_sets = bangla_sets

    assert follow_names(bangla_grammar, follow_sets, "S") == {"$"}
    assert follow_names(bangla_grammar, follow_sets, "NP") >= {"noun", "verb", "adjective", "pronoun"}
    assert "conjunction" in follow_names(bangla_grammar, follow_sets, "NP")
    assert follow_names(bangla_grammar, follow_sets, "VP2") == {"$"}
    assert follow_names(bangla_grammar, follow_sets, "AP") == {
        "adjective", "conjunction", "noun", "pronoun", "ptrn", "verb", "$",
    }


def test_first_of_sequence(bangla_grammar, bangla_sets):
    first_sets, _ = bangla_sets
    ids = bangla_grammar.id_of

    assert analyzer.first_of_sequence((), first_sets, bangla_grammar) == (frozenset(), True)
    assert analyzer.first_of_sequence((ids("noun"), ids("NP1")), first_sets, bangla_grammar) == (
        frozenset({ids("noun")}), False,
    )
    terminals, nullable = analyzer.first_of_sequence((ids("NP2"), ids("verb")), first_sets, bangla_grammar)
    assert terminals == first_sets.of(ids("NP2")) | {ids("verb")}
    assert not nullable


def test_follow_simple_cases():
    grammar = reader.parse_text("S -> A b ;\nA -> a ;")
    first_sets = analyzer.compute_first(grammar)

    assert follow_names(grammar, analyzer.compute_follow(grammar, first_sets), "A") == {"b"}

    grammar = reader.parse_text("S -> A ;\nA -> a ;")
    follow_sets = analyzer.compute_follow(grammar, analyzer.compute_first(grammar))
    assert follow_sets.of(grammar.id_of("A")) == frozenset({END_ID})


def test_unreachable_nonterminal_has_empty_follow():
    grammar = reader.parse_text("S -> a ;\nB -> B c | b ;")
    _, follow_sets = analyzer.analyze(grammar)

    assert follow_sets.of(grammar.id_of("B")) == frozenset()


def test_pass_counts_recorded(bangla_grammar):
    local = SetAnalyzer()
    local.analyze(bangla_grammar)

    assert set(local.passes) == {"nullable", "first", "follow"}
    assert all(count >= 1 for count in local.passes.values())


def test_format_set():
    assert format_set(["b", "$", "a"]) == "{a, b, $}"
    assert format_set(["ptrn"], nullable=True) == "{ptrn, eps}"
    assert format_set([]) == "{}"


def test_dump_minimal_grammar():
    grammar = reader.parse_text("S -> a ;")
    first_sets, follow_sets = analyzer.analyze(grammar)

    assert dump.format(grammar, first_sets, follow_sets) == "FIRST(S) = {a}\n\nFOLLOW(S) = {$}\n"


def test_dump_reads_back(bangla_grammar, bangla_sets):
    first, follow = dump.parse(dump.format(bangla_grammar, *bangla_sets))

    assert first["AP2"] == (frozenset({"ptrn"}), True)
    assert follow["S"] == (frozenset({"$"}), False)
    assert len(first) == len(follow) == 14


@pytest.mark.parametrize("text", ["FIRST(A) = a, b", "FIRST(A) = {a}\nFIRST(A) = {b}", "SECOND(A) = {a}"])
def test_dump_parse_errors(text):
    with pytest.raises(SetDumpError):
        dump.parse(text)
