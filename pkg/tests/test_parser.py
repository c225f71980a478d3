from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qhh import GF, QQ, corpus, parse_algebra, parse_element, format_algebra, ParseError, SemanticError

from conftest import CORPUS

HEADER = "vertex 1 2 3 4\narrow a 1 4\narrow b 4 1\narrow g 3 4\narrow d 4 3\narrow e 4 2\narrow x 2 4\n"


def test_preproj_corpus_entry():
    pres = corpus.load("preproj-D4")
    q = pres.quiver
    assert pres.name == "preproj-D4"
    assert pres.field == GF(2)
    assert q.vertices == ["1", "2", "3", "4"]
    assert len(pres.relations) == 4
    expected = [parse_element(t, q, pres.field) for t in ("a b", "x e", "g d", "b a + d g + e x")]
    assert pres.relations == expected


def test_nonstd_corpus_entry_six_relations():
    pres = corpus.load("nonstd-D4", QQ)
    q = pres.quiver
    assert len(pres.relations) == 6
    assert pres.relations[0] == parse_element("a b - a d g b", q, QQ)
    assert pres.relations[0].coefficient(q.path("a d g b")) == -1
    assert corpus.load("nonstd-D4-six") == corpus.load("nonstd-D4")


def test_field_override_rereads_signs():
    pres = corpus.load("nonstd-D4", GF(3))
    assert pres.relations[0].coefficient(pres.quiver.path("a d g b")) == 2
    assert corpus.load("nonstd-D4").with_field(QQ) == corpus.load("nonstd-D4", QQ)


def test_coefficients_and_trivial_paths():
    pres = parse_algebra(HEADER)
    q = pres.quiver
    x = parse_element("2/3 b a - 3 d g + @4", q, QQ)
    assert x.coefficient(q.path("b a")) == Fraction(2, 3)
    assert x.coefficient(q.path("d g")) == -3
    assert x.coefficient(q.trivial("4")) == 1


def test_non_composable_relation():
    with pytest.raises(SemanticError, match="non-composable"):
        parse_algebra(HEADER + "rel a g\n")


def test_non_uniform_relation():
    with pytest.raises(SemanticError, match="not uniform"):
        parse_algebra(HEADER + "rel a b + g d\n")


def test_short_relation_rejected():
    with pytest.raises(SemanticError, match="length < 2"):
        parse_algebra(HEADER + "rel a\n")


def test_zero_relation_rejected():
    with pytest.raises(SemanticError, match="is zero"):
        parse_algebra(HEADER + "field gf2\nrel a b + a b\n")


def test_unknown_arrow():
    with pytest.raises(SemanticError):
        parse_algebra(HEADER + "rel a q\n")


def test_syntax_error_location():
    with pytest.raises(ParseError) as info:
        parse_algebra(HEADER + "rel b a + + d g\n")
    assert (info.value.line, info.value.column) == (8, 11)
    with pytest.raises(ParseError) as info:
        parse_algebra(HEADER + "relation a b\n")
    assert (info.value.line, info.value.column) == (8, 1)
    with pytest.raises(ParseError) as info:
        parse_algebra(HEADER + "rel a b$\n")
    assert info.value.line == 8 and info.value.column == 7


def test_bad_field():
    with pytest.raises(ParseError):
        parse_algebra("field gf 4\n" + HEADER)


def test_bad_arrow_endpoint():
    with pytest.raises(SemanticError):
        parse_algebra("vertex 1\narrow a 1 2\n")


def test_comments_and_blank_lines():
    pres = parse_algebra("# header\n\nvertex 1   # one vertex\narrow x 1 1\nrel x x  # square\n")
    assert len(pres.relations) == 1


@pytest.mark.parametrize("name", CORPUS)
@pytest.mark.parametrize("field", [GF(2), GF(3), QQ])
def test_round_trip(name, field):
    pres = corpus.load(name, field)
    again = parse_algebra(format_algebra(pres), name=name)
    assert again == pres
    assert format_algebra(again) == format_algebra(pres)


@given(st.lists(st.tuples(st.integers(-5, 5).filter(bool), st.sampled_from(["b a", "d g", "e x", "b a b a", "d g d g"])),
                min_size=1, max_size=5))
@settings(max_examples=80, deadline=None)
def test_element_format_round_trip(terms):
    q = parse_algebra(HEADER).quiver
    text = " + ".join(f"{c} {w}" for c, w in terms).replace("+ -", "- ")
    x = parse_element(text, q, QQ)
    assert parse_element(x.format(q), q, QQ) == x if not x.is_zero() else True


def test_corpus_names():
    assert set(CORPUS) <= set(corpus.names())
    with pytest.raises(FileNotFoundError):
        corpus.load("no-such-algebra")
