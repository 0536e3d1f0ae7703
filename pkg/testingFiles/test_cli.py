import json

import pytest

from app import ExitStatus, main
from casestudy.config import CaseStudyConfig
from conftest import EXPRESSION_GRAMMAR
from driver.config import DETERMINISTIC, ParserConfig

GRAMMAR = str(CaseStudyConfig.path(CaseStudyConfig.GRAMMAR_FILE))
PUBLISHED_TABLE = str(CaseStudyConfig.path(CaseStudyConfig.PUBLISHED_TABLE_FILE))
CORPUS = str(CaseStudyConfig.path(CaseStudyConfig.CORPUS_FILE))


@pytest.fixture(autouse=True)
def parser_config(monkeypatch):
    monkeypatch.setattr(ParserConfig, "STEP_BUDGET", ParserConfig.STEP_BUDGET)
    monkeypatch.setattr(ParserConfig, "DEFAULT_MODE", DETERMINISTIC)


@pytest.fixture
def grammar_file(tmp_path):
    def write(text, name="g.grammar"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write


def run(capsys, *argv):
    status = main(list(argv))
    return status, capsys.readouterr().out


def test_analyze_bangla(capsys):
    status, out = run(capsys, "analyze", GRAMMAR)

    assert status == ExitStatus.OK
    assert "FIRST(AP) = {adjective}\n" in out
    assert "FOLLOW(S) = {$}\n" in out


def test_analyze_minimal_grammar(capsys, grammar_file):
    status, out = run(capsys, "analyze", grammar_file("S -> a ;"))

    assert status == ExitStatus.OK
    assert out == "FIRST(S) = {a}\n\nFOLLOW(S) = {$}\n"


def test_missing_file(capsys, tmp_path):
    status, _ = run(capsys, "analyze", str(tmp_path / "absent.grammar"))

    assert status == ExitStatus.INPUT_ERROR


def test_syntax_error_exits_with_grammar_error(capsys, grammar_file):
    status, _ = run(capsys, "analyze", grammar_file("S -> a"))

    assert status == ExitStatus.GRAMMAR_ERROR


def test_factor(capsys, grammar_file):
    status, out = run(capsys, "factor", grammar_file("A -> a b | a c ;"))

    assert status == ExitStatus.OK
    assert out == "A -> a A1 ;\nA1 -> b | c ;\n"


def test_strict_table_on_bangla_grammar(capsys):
    status, out = run(capsys, "table", "--strict", GRAMMAR)

    assert status == ExitStatus.GRAMMAR_ERROR
    assert out.startswith("TABLE bangla_factored\n")
    assert "first-follow\tNP1, pronoun\tNP1->pronoun NP2 / @eps\n" in out


def test_strict_table_on_ll1_grammar(capsys, grammar_file):
    status, out = run(capsys, "table", "--strict", grammar_file(EXPRESSION_GRAMMAR, "expr.grammar"))

    assert status == ExitStatus.OK
    assert out.startswith("TABLE expr\n")
    assert out.endswith("\nCONFLICTS 0\n")


def test_table_refuses_left_recursion(capsys, grammar_file):
    status, out = run(capsys, "table", grammar_file("A -> A a | b ;"))

    assert status == ExitStatus.GRAMMAR_ERROR
    assert out == ""


def test_table_json(capsys, grammar_file):
    status, out = run(capsys, "table", "--format", "json", grammar_file("S -> a S | @eps ;", "tiny.grammar"))
    data = json.loads(out)

    assert status == ExitStatus.OK
    assert data["name"] == "tiny"
    assert data["cols"] == ["a", "$"]
    assert data["conflicts"] == []


def test_published_diff_is_stable(capsys):
    first_status, first = run(capsys, "diff-paper")
    _, second = run(capsys, "diff-paper")

    assert first_status == ExitStatus.OK
    assert first == second
    assert "table-cell\tVP2, noun\tpublished: noun VP3\tcomputed: (empty)\n" in first


def test_parse_tags_with_trace(capsys):
    status, out = run(capsys, "parse", "--tags", "--table", PUBLISHED_TABLE, "--trace", "modifier noun noun verb")
    lines = out.splitlines()

    assert status == ExitStatus.OK
    assert lines[:2] == ["accepted", "Stack\tInput\tAction"]
    assert lines[-1] == "$\t$\tSentence is accepted"


def test_parse_rejection(capsys):
    status, out = run(capsys, "parse", "--tags", "--table", PUBLISHED_TABLE, "noun noun")

    assert status == ExitStatus.REJECTED
    assert out == "rejected: empty-cell at token 2, expected {adjective, aw, conjunction, noun, pronoun, verb}\n"


def test_parse_sentence_with_tree(capsys):
    status, out = run(capsys, "parse", "--table", PUBLISHED_TABLE, "--tree", "আমি খাই ভাত।")
    lines = out.splitlines()

    assert status == ExitStatus.OK
    assert lines[0] == "accepted"
    assert lines[1].startswith("(S ")
    assert "(pronoun আমি)" in lines[1]


def test_parse_json(capsys):
    status, out = run(capsys, "parse", "--tags", "--table", PUBLISHED_TABLE, "--format", "json", "noun noun")
    data = json.loads(out)

    assert status == ExitStatus.REJECTED
    assert data["verdict"] == "rejected"
    assert data["reject"]["stack_top"] == "NP3"
    assert data["tree"] is None
    assert data["moves"][0]["action"] == ""


def test_parse_unknown_word(capsys):
    status, _ = run(capsys, "parse", "আমি অজানা খাই")

    assert status == ExitStatus.INPUT_ERROR


def test_parse_unknown_terminal(capsys):
    status, _ = run(capsys, "parse", "--tags", "pronoun verb neg")

    assert status == ExitStatus.INPUT_ERROR


def test_parse_takes_one_sentence(capsys):
    status, _ = run(capsys, "parse", "আমি খাই ভাত। ভাত আমি খাই।")

    assert status == ExitStatus.USAGE


def test_bad_budget(capsys):
    status, _ = run(capsys, "parse", "--tags", "--budget", "0", "noun verb")

    assert status == ExitStatus.USAGE


def test_tagging_then_parsing_matches_parsing_tags(capsys):
    from_tags = run(capsys, "parse", "--tags", "pronoun noun verb")
    from_text = run(capsys, "parse", "আমি ভাত খাই")

    assert from_tags == from_text


def test_backtrack_alias(capsys, grammar_file):
    path = grammar_file("S -> a b | a c ;")

    assert run(capsys, "parse", "--grammar", path, "--tags", "a c")[0] == ExitStatus.REJECTED
    assert run(capsys, "parse", "--grammar", path, "--policy", "backtrack", "--tags", "a c")[0] == ExitStatus.OK


def test_tag(capsys):
    status, out = run(capsys, "tag", "আমি ভাত খাই। ভাত আমি খাই।")

    assert status == ExitStatus.OK
    assert out == "আমি/pronoun ভাত/noun খাই/verb\nভাত/noun আমি/pronoun খাই/verb\n"


def test_tag_with_lexicon_file(capsys, tmp_path):
    lexicon = tmp_path / "words.tsv"
    lexicon.write_text("রহিম\tnoun\n", encoding="utf-8")

    status, out = run(capsys, "tag", "--lexicon", str(lexicon), "রহিম")

    assert status == ExitStatus.OK
    assert out == "রহিম/noun\n"


def test_batch(capsys):
    status, out = run(capsys, "batch", "--table", PUBLISHED_TABLE, CORPUS)

    assert status == ExitStatus.OK
    assert out.splitlines()[-1] == "total: I=19 D=13 A=68.42%"


def test_batch_json(capsys):
    status, out = run(capsys, "batch", "--table", PUBLISHED_TABLE, "--format", "json", CORPUS)

    assert status == ExitStatus.OK
    assert json.loads(out)["all_matched"] is True


def test_batch_mismatch_exits_rejected(capsys, tmp_path):
    corpus = tmp_path / "corpus.tsv"
    corpus.write_text("T\taccept\tnoun noun\n", encoding="utf-8")

    status, out = run(capsys, "batch", "--table", PUBLISHED_TABLE, str(corpus))

    assert status == ExitStatus.REJECTED
    assert out.startswith("MISMATCH\t")


def test_unknown_subcommand(capsys):
    assert main(["frobnicate"]) == ExitStatus.USAGE


def test_budget_flag_sets_step_budget(capsys, grammar_file):
    status, out = run(capsys, "parse", "--grammar", grammar_file("S -> a S | @eps ;"), "--budget", "1", "--tags", "a a")

    assert status == ExitStatus.REJECTED
    assert out.startswith("rejected: budget-exhausted at token 1")
    assert ParserConfig.STEP_BUDGET == 1


def test_policy_flag_sets_default_mode(capsys, grammar_file):
    run(capsys, "parse", "--grammar", grammar_file("S -> a ;"), "--policy", "backtrack", "--tags", "a")

    assert ParserConfig.DEFAULT_MODE == "backtracking"
