import pytest
from hypothesis import strategies as st

from casestudy.loader import CaseStudyLoader
from grammar.model import Grammar
from grammar.reader import GrammarReader

EXPRESSION_GRAMMAR = """
E -> T E' ;
E' -> + T E' | @eps ;
T -> F T' ;
T' -> * F T' | @eps ;
F -> ( E ) | id ;
"""


@st.composite
def grammars(draw, max_nonterminals=6, max_terminals=4, max_rhs=4, max_alternatives=3):
    """Random grammars over N0..Nk and t0..tm; every Ni gets at least one production."""
    nonterminals = [f"N{i}" for i in range(draw(st.integers(1, max_nonterminals)))]
    terminals = [f"t{i}" for i in range(draw(st.integers(1, max_terminals)))]
    symbol = st.sampled_from(nonterminals + terminals)
    rhs = st.lists(symbol, max_size=max_rhs).map(tuple)

    rules = []
    for nonterminal in nonterminals:
        alternatives = draw(st.lists(rhs, min_size=1, max_size=max_alternatives, unique=True))
        rules.extend((nonterminal, alternative) for alternative in alternatives)
    return Grammar.from_rules(rules)


@pytest.fixture(scope="session")
def case_study():
    return CaseStudyLoader().load()


@pytest.fixture(scope="session")
def bangla_grammar(case_study):
    return case_study.grammar


@pytest.fixture(scope="session")
def transcribed_table(case_study):
    return case_study.transcribed_table


@pytest.fixture
def expression_grammar():
    return GrammarReader().parse_text(EXPRESSION_GRAMMAR)
