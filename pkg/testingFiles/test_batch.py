import pytest

from casestudy.batch_runner import (
    ERROR,
    STATUS_ERROR,
    STATUS_MISMATCH,
    BatchRunner,
    LabelResult,
)
from casestudy.corpus import CorpusReader
from driver.model import UNKNOWN_TERMINAL, DriverPolicy

reader = CorpusReader()


@pytest.fixture(scope="module")
def runner(case_study):
    return BatchRunner(case_study.transcribed_table, case_study.lexicon)


@pytest.fixture(scope="module")
def report(runner, case_study):
    return runner.run(case_study.corpus)


def test_acceptance_rates(runner, report):
    lines = runner.format_text(report).splitlines()

    assert lines[-4:] == [
        "traditional: I=12 D=7 A=58.33%",
        "nontraditional: I=4 D=4 A=100.00%",
        "paragraph: I=3 D=2 A=66.67%",
        "total: I=19 D=13 A=68.42%",
    ]


def test_every_entry_gets_its_expected_verdict(report):
    assert report.all_matched
    assert len(report.records) == 19
    assert all(r.status == "ok" for r in report.records)


def test_negation_tag_rejects_as_unknown_terminal(report):
    negated = [r for r in report.records if "neg" in r.tags]

    assert len(negated) == 2
    assert all(r.reject.reason == UNKNOWN_TERMINAL for r in negated)


def test_raw_sentences_are_tagged(report):
    raw = [r for r in report.records if r.entry.kind == "raw-sentence"]

    assert raw[0].tags == ("modifier", "noun", "noun", "verb")


def test_paragraph_is_accepted_when_every_sentence_is(runner):
    report = runner.run(reader.parse_text("S\taccept\tআমি ভাত খাই। আমি খাই ভাত।\n"))
    record = report.records[0]

    assert record.verdict == "accept"
    assert record.tags == ("pronoun", "noun", "verb", "pronoun", "verb", "noun")
    assert report.total.total == 1
    assert report.total.accepted == 1


def test_paragraph_rejects_at_first_failing_sentence(runner):
    report = runner.run(reader.parse_text("S\taccept\tআমি ভাত খাই। ভাত ভাত। আমি খাই।\n"))
    record = report.records[0]

    assert record.verdict == "reject"
    assert record.sentence == 1
    assert (record.reject.position, record.reject.stack_top) == (2, "NP3")
    assert runner.to_json(report)["per_sentence"][0]["reject"]["sentence"] == 1


def test_shipped_paragraphs(report):
    paragraphs = [r for r in report.records if r.entry.label == "paragraph"]

    assert [r.verdict for r in paragraphs] == ["accept", "reject", "accept"]
    assert paragraphs[1].sentence == 1


def test_rate_text():
    assert LabelResult("x", 4, 3).rate_text == "75.00%"
    assert LabelResult("x", 0, 0).rate is None
    assert LabelResult("x", 0, 0).rate_text == "n/a"


def test_empty_corpus(runner):
    report = runner.run([])

    assert report.labels == []
    assert runner.format_text(report) == "total: I=0 D=0 A=n/a\n"
    assert report.all_matched


def test_mismatch_is_flagged(runner):
    report = runner.run(reader.parse_text("T\taccept\tnoun noun\n"))

    assert report.records[0].status == STATUS_MISMATCH
    assert not report.all_matched
    assert runner.format_text(report).startswith("MISMATCH\treject\tnoun noun\n")


def test_failing_entry_is_recorded_and_run_continues(case_study):
    runner = BatchRunner(case_study.transcribed_table, policy=DriverPolicy(mode="greedy"))
    report = runner.run(reader.parse_text("T\taccept\tnoun verb\nT\treject\tnoun\n"))

    assert [r.verdict for r in report.records] == [ERROR, ERROR]
    assert report.records[0].status == STATUS_ERROR
    assert "greedy" in report.records[0].error


def test_raw_sentence_needs_a_lexicon(case_study):
    with pytest.raises(ValueError):
        BatchRunner(case_study.transcribed_table).run(reader.parse_text("S\taccept\tআমি খাই ভাত\n"))


def test_json_report(runner, report):
    data = runner.to_json(report)

    assert data["all_matched"] is True
    assert [row["label"] for row in data["per_type"]] == ["traditional", "nontraditional", "paragraph", "total"]
    assert data["per_type"][-1]["I"] == 19
    assert data["per_type"][-1]["D"] == 13
    assert data["per_sentence"][1]["reject"]["position"] == 2
    assert data["per_sentence"][1]["reject"]["stack_top"] == "NP3"
