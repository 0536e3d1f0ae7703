import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from casestudy.config import CaseStudyConfig
from casestudy.corpus import DEFAULT_LABEL, RAW_SENTENCE, TAG_SEQUENCE, CorpusFormatError, CorpusReader
from tagging.tagger import Tagger

reader = CorpusReader()


def test_shipped_corpus(case_study):
    corpus = case_study.corpus

    assert len(corpus) == 19
    assert [e.label for e in corpus].count("traditional") == 12
    assert [e.label for e in corpus].count("nontraditional") == 4
    assert [e.label for e in corpus].count("paragraph") == 3
    assert corpus[0].kind == TAG_SEQUENCE
    assert corpus[0].payload == ("modifier", "noun", "noun", "verb")
    assert corpus[0].provenance.startswith("worked example")
    assert corpus[-1].provenance == ""


def test_case_study_pieces_line_up(case_study):
    assert len(case_study.grammar.productions) == 61
    assert len(case_study.transcribed_table.synthetic) == 10
    assert case_study.computed_conflicts
    assert case_study.lexicon.lookup("ছেলে") == "noun"
    assert set(case_study.published_first) == set(case_study.published_follow)


def test_corpus_labels_and_provenance():
    entries = reader.parse_text(
        "T\taccept\ta b\n"
        "\n"
        "# label: questions\n"
        "# from a textbook\n"
        "# second note\n"
        "S\treject\tআমি কি\n"
        "\n"
        "# dropped note\n"
        "\n"
        "T\taccept\tc\n"
    )

    assert [e.label for e in entries] == [DEFAULT_LABEL, "questions", "questions"]
    assert [e.provenance for e in entries] == ["", "from a textbook; second note", ""]
    assert entries[1].kind == RAW_SENTENCE
    assert entries[1].text == "আমি কি"
    assert entries[2].line == 10


def test_tag_entry_text_is_normalised():
    entry = reader.parse_text("T\treject\t  noun   noun \n")[0]

    assert entry.payload == ("noun", "noun")
    assert entry.text == "noun noun"


@pytest.mark.parametrize("text", [
    "T accept noun\n",
    "X\taccept\tnoun\n",
    "T\tmaybe\tnoun\n",
    "T\taccept\tnoun\textra\n",
])
def test_malformed_corpus(text):
    with pytest.raises(CorpusFormatError):
        reader.parse_text(text)


def test_data_folder_override(tmp_path, monkeypatch):
    monkeypatch.setattr(CaseStudyConfig, "DATA_FOLDER", CaseStudyConfig.DATA_FOLDER)
    CaseStudyConfig.set_data_folder(str(tmp_path))

    assert CaseStudyConfig.path("x.tsv") == tmp_path / "x.tsv"


# word classes of the tag set plus the grammar's particle and marker terminals
CASE_STUDY_TAGS = {
    "noun", "pronoun", "adjective", "verb", "conjunction", "modifier", "neg",
    "ptrn", "ip", "aw", "xp", "tp",
}


def test_case_study_lexicon_uses_known_tags(case_study):
    assert set(case_study.lexicon.tags()) <= CASE_STUDY_TAGS


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_every_tagged_word_gets_a_known_tag(case_study, data):
    words = sorted(case_study.lexicon.entries)
    sentence = " ".join(data.draw(st.lists(st.sampled_from(words), min_size=1, max_size=6)))

    tagged = Tagger().tag_sentence(case_study.lexicon, sentence)

    assert set(tagged.tags) <= CASE_STUDY_TAGS
    assert len(tagged.tags) == len(tagged.tokens)
