import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monofg.errors import ParseError, UnknownCorpusError
from monofg.presentation import CORPUS_NAMES, corpus_text, load_corpus, parse_presentation, serialize

from randgen import random_presentation

GOOD = """# comment
quiver
vertices 1 2
arrow a 1 1   # a loop
arrow b 1 2
relations
a a
a b
end
"""


def test_parse_basic():
    p = parse_presentation(GOOD, name="x")
    assert len(p.quiver.vertices) == 2
    assert [str(r) for r in p.rho] == ["a a", "a b"]
    assert p.name == "x"


@pytest.mark.parametrize(
    "text, line, col, fragment",
    [
        ("quivr\n", 1, 1, "expected 'quiver'"),
        ("quiver\nvertices 1\nfoo\n", 3, 1, "unknown token"),
        ("quiver\nvertices 1\narrow a 1 2\n", 3, 11, "undeclared vertex"),
        ("quiver\nvertices 1\narrow a 1 1\nrelations\na c\nend\n", 5, 3, "undeclared arrow"),
        ("quiver\nvertices 1 2\narrow a 1 2\nrelations\na a\nend\n", 5, 3, "not composable"),
        ("quiver\nvertices 1\narrow a 1 1\narrow a 1 1\n", 4, 7, "duplicate arrow"),
        ("quiver\nvertices 1 1\n", 2, 12, "duplicate vertex"),
        ("quiver\nvertices 1\narrow a 1 1\nrelations\na a\na a\nend\n", 6, 1, "duplicate relation"),
        ("quiver\nvertices 1\narrow a 1 1\nrelations\na\nend\n", 5, 1, "length at least 2"),
        ("quiver\nvertices 1 end\n", 2, 12, "keyword"),
        ("quiver\nvertices 1\narrow a 1 1\nrelations\na a\n", 5, 1, "unexpected end of input"),
    ],
)
def test_parse_errors_are_located(text, line, col, fragment):
    with pytest.raises(ParseError) as info:
        parse_presentation(text)
    err = info.value
    assert fragment in err.message
    assert (err.location.line, err.location.column) == (line, col)


def test_corpus_names_and_unknown_entry():
    assert len(CORPUS_NAMES) == 5
    with pytest.raises(UnknownCorpusError):
        corpus_text("nope")
    with pytest.raises(KeyError):
        load_corpus("nope")


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_corpus_round_trip(name):
    p = load_corpus(name)
    again = parse_presentation(serialize(p), name=name)
    assert again == p
    assert serialize(again) == serialize(p)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.booleans())
def test_random_round_trip(seed, canonical):
    p = random_presentation(seed)
    assert parse_presentation(serialize(p, canonical=canonical)) == p


def test_corpus_shapes(corpus):
    # quiver sizes of the drawn examples
    sizes = {n: (len(p.quiver.vertices), len(p.quiver.arrows), len(p.rho)) for n, p in corpus.items()}
    assert sizes["ex_dkoszul3"] == (4, 5, 4)
    assert sizes["ex_62_fs"] == (4, 4, 2)
    assert sizes["ex_42_stretched"] == (7, 8, 3)
    assert sizes["ex_63_mixed"] == (10, 11, 4)
    assert sizes["ex_notfg_quadratic"] == (2, 2, 2)
