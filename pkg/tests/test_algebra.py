import random
import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monofg.algebra import (
    DisconnectedQuiverWarning,
    MonomialPresentation,
    check_minimality,
    connectedness_warning,
    graded_dims,
    is_connected,
    is_finite_dimensional,
    normal_basis,
    normal_words_up_to,
    require_minimal,
)
from monofg.errors import InfiniteDimensionError, NonMinimalError, QuiverError
from monofg.presentation import parse_presentation
from monofg.quiver import Quiver, enumerate_paths

from randgen import minimize, random_quiver, random_walk


def _contains_relation(path, rho):
    s = " " + " ".join(path.arrows) + " "
    return any(" " + " ".join(r.arrows) + " " in s for r in rho)


def _random_any(seed):
    """Random presentation that may be infinite dimensional."""
    rng = random.Random(seed)
    q = random_quiver(rng, max_arrows=4)
    rho = [r for r in (random_walk(rng, q, rng.randint(2, 3)) for _ in range(rng.randint(0, 4))) if r]
    return MonomialPresentation(q, minimize(rho))


def _finite_by_states(p):
    """[DERIVED] finite iff the set of reachable (last L-1 arrows) states dies out."""
    L = max(2, p.max_relation_length)
    states = {(v, ()) for v in p.quiver.vertices}
    bound = len(p.quiver.vertices) * (len(p.quiver.arrows) + 1) ** (L - 1) + 1
    for _ in range(bound):
        nxt = set()
        for v, window in states:
            for a in p.quiver.outgoing(v):
                w = window + (a.id,)
                if any(w[len(w) - k :] in p.relation_words for k in range(2, len(w) + 1)):
                    continue
                nxt.add((a.target, w[-(L - 1) :]))
        if not nxt:
            return True
        states = nxt
    return False


def test_presentation_validation():
    q = Quiver(["1", "2"], [("a", "1", "1"), ("b", "1", "2")])
    with pytest.raises(QuiverError):
        MonomialPresentation(q, [q.path("a")])
    with pytest.raises(QuiverError):
        MonomialPresentation(q, [q.path("a a"), q.path("a a")])


def test_minimality(corpus):
    for p in corpus.values():
        assert check_minimality(p) == []
    q = Quiver(["1"], [("a", "1", "1")])
    p = MonomialPresentation(q, [q.path("a a"), q.path("a a a")])
    assert check_minimality(p) == [(q.path("a a"), q.path("a a a"))]
    with pytest.raises(NonMinimalError):
        require_minimal(p)


def test_is_zero(corpus):
    p = corpus["ex_dkoszul3"]
    q = p.quiver
    assert p.is_zero(q.path("b a a a"))
    assert not p.is_zero(q.path("b a a"))
    assert p.is_zero(q.path("g1 g2 g3"))


def test_finite_dimension_of_corpus(corpus):
    for p in corpus.values():
        assert is_finite_dimensional(p)


def test_infinite_dimension_witness():
    p = parse_presentation("quiver\nvertices 1\narrow a 1 1\narrow b 1 1\nrelations\na a\nend\n")
    fd = is_finite_dimensional(p)
    assert not fd
    w = fd.witness
    assert w.is_closed and len(w) >= 1
    # the witness can be pumped without meeting a relation
    assert not p.is_zero(w.__class__(w.arrows * 3, w.vertices + w.vertices[1:] * 2))
    with pytest.raises(InfiniteDimensionError):
        normal_basis(p)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6))
def test_finiteness_matches_state_oracle(seed):
    p = _random_any(seed)
    assert bool(is_finite_dimensional(p)) == _finite_by_states(p)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 5))
def test_normal_words_match_brute_force(seed, n):
    # [DERIVED] all paths of length n that avoid every relation as a substring
    p = _random_any(seed)
    brute = [x for x in enumerate_paths(p.quiver, n) if not _contains_relation(x, p.rho)]
    got = normal_words_up_to(p, n).get(n, [])
    assert got == brute


def test_graded_dims_of_quadratic_example(corpus):
    # [DERIVED] e_v, e_w; a, b; nothing longer since a a and a b vanish
    assert graded_dims(normal_basis(corpus["ex_notfg_quadratic"])) == [2, 2]


def test_graded_dims_of_3_koszul_example(corpus):
    b = normal_basis(corpus["ex_dkoszul3"])
    dims = graded_dims(b)
    brute = [
        sum(1 for x in enumerate_paths(corpus["ex_dkoszul3"].quiver, n) if not _contains_relation(x, corpus["ex_dkoszul3"].rho))
        for n in range(len(dims) + 2)
    ]
    assert dims == brute[: len(dims)]
    assert brute[len(dims):] == [0, 0]


def test_connectedness():
    p = parse_presentation("quiver\nvertices 1 2\narrow a 1 1\nrelations\na a\nend\n")
    assert not is_connected(p.quiver)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        assert connectedness_warning(p)
    assert any(issubclass(w.category, DisconnectedQuiverWarning) for w in caught)
