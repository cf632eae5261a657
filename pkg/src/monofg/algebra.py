"""Monomial algebras KQ/(rho): minimality, finite dimension, normal words."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

import networkx as nx

from .errors import InfiniteDimensionError, NonMinimalError, QuiverError
from .quiver import Path, Quiver


class DisconnectedQuiverWarning(UserWarning):
    pass


class MonomialPresentation:
    """A quiver together with a set of monomial relations."""

    def __init__(self, quiver: Quiver, rho: Iterable[Path], name: Optional[str] = None):
        self.quiver = quiver
        rho = list(rho)
        for r in rho:
            if len(r) < 2:
                raise QuiverError(f"relation {r} has length < 2")
            # rebuilding checks that every arrow exists and the word composes
            if quiver.path(r.arrows) != r:
                raise QuiverError(f"relation {r} is not a path of the quiver")
        if len({r.arrows for r in rho}) != len(rho):
            raise QuiverError("duplicate relation")
        self.rho = tuple(sorted(rho))
        self.name = name

    def __eq__(self, other):
        if not isinstance(other, MonomialPresentation):
            return NotImplemented
        return self.quiver == other.quiver and set(self.rho) == set(other.rho)

    def __hash__(self):
        return hash((self.quiver, frozenset(self.rho)))

    def __repr__(self):
        label = self.name or "presentation"
        return f"<{label}: {len(self.quiver.vertices)} vertices, {len(self.quiver.arrows)} arrows, |rho|={len(self.rho)}>"

    @cached_property
    def relation_words(self) -> frozenset:
        return frozenset(r.arrows for r in self.rho)

    @cached_property
    def max_relation_length(self) -> int:
        return max((len(r) for r in self.rho), default=0)

    def is_zero(self, p: Path) -> bool:
        """True when p contains a relation, i.e. p = 0 in the algebra."""
        words, L = self.relation_words, self.max_relation_length
        arrows = p.arrows
        n = len(arrows)
        for i in range(n):
            for j in range(i + 2, min(n, i + L) + 1):
                if arrows[i:j] in words:
                    return True
        return False

    def has_relation_suffix(self, arrows: tuple) -> bool:
        n = len(arrows)
        for k in range(2, min(n, self.max_relation_length) + 1):
            if arrows[n - k :] in self.relation_words:
                return True
        return False


def check_minimality(p: MonomialPresentation) -> list:
    """Pairs (r, s) of distinct relations with r a subpath of s."""
    out = []
    for s in p.rho:
        for r in p.rho:
            if r != s and len(r) <= len(s) and s.contains(r):
                out.append((r, s))
    return out


def require_minimal(p: MonomialPresentation) -> None:
    bad = check_minimality(p)
    if bad:
        r, s = bad[0]
        raise NonMinimalError(f"relation set is not minimal: {r} is a subpath of {s}")


@dataclass(frozen=True)
class FiniteDimResult:
    finite: bool
    witness: Optional[Path] = None

    def __bool__(self):
        return self.finite


def _extension_graph(p: MonomialPresentation) -> tuple:
    """Nodes: normal words of length L-1.  Edges: overlapping pairs whose merge is normal."""
    L = max(1, p.max_relation_length)
    nodes = normal_words_up_to(p, L - 1).get(L - 1, [])
    g = nx.DiGraph()
    for n in nodes:
        g.add_node(n.arrows if n.arrows else ("@", n.base))
    q = p.quiver
    for n in nodes:
        for a in q.outgoing(n.target):
            word = n.arrows + (a.id,)
            if p.has_relation_suffix(word):
                continue
            nxt = word[1:] if word[1:] else ("@", a.target)
            src = n.arrows if n.arrows else ("@", n.base)
            g.add_edge(src, nxt, arrow=a.id)
    return g, L


def is_finite_dimensional(p: MonomialPresentation) -> FiniteDimResult:
    g, _ = _extension_graph(p)
    try:
        cycle = nx.find_cycle(g)
    except nx.NetworkXNoCycle:
        return FiniteDimResult(True)
    word = [g.edges[u, v]["arrow"] for u, v in cycle]
    return FiniteDimResult(False, p.quiver.path(word))


def normal_words_up_to(p: MonomialPresentation, max_length: int) -> dict:
    """Normal (relation-avoiding) paths of length <= max_length, grouped by length."""
    q = p.quiver
    level = [Path.trivial(v) for v in q.sorted_vertices()]
    out = {0: level}
    for n in range(1, max_length + 1):
        nxt = []
        for w in level:
            for a in q.outgoing(w.target):
                arrows = w.arrows + (a.id,)
                if not p.has_relation_suffix(arrows):
                    nxt.append(Path(arrows, w.vertices + (a.target,)))
        if not nxt:
            break
        level = sorted(nxt, key=lambda x: x.arrows)
        out[n] = level
    return out


@dataclass(frozen=True)
class NormalBasis:
    paths_by_length: dict

    def all_paths(self) -> list:
        return [x for k in sorted(self.paths_by_length) for x in self.paths_by_length[k]]

    def __len__(self):
        return sum(len(v) for v in self.paths_by_length.values())


def normal_basis(p: MonomialPresentation) -> NormalBasis:
    fd = is_finite_dimensional(p)
    if not fd:
        raise InfiniteDimensionError(f"algebra is infinite dimensional; {fd.witness} can be pumped")
    # a normal word longer than the number of extension-graph nodes would give a cycle
    g, L = _extension_graph(p)
    bound = g.number_of_nodes() + L
    return NormalBasis(normal_words_up_to(p, bound))


def graded_dims(b: NormalBasis) -> list:
    top = max((k for k, v in b.paths_by_length.items() if v), default=-1)
    return [len(b.paths_by_length.get(k, [])) for k in range(top + 1)]


def is_connected(q: Quiver) -> bool:
    g = nx.Graph()
    g.add_nodes_from(q.vertices)
    g.add_edges_from((a.source, a.target) for a in q.arrows)
    return g.number_of_nodes() == 0 or nx.is_connected(g)


def connectedness_warning(p: MonomialPresentation) -> Optional[str]:
    if is_connected(p.quiver):
        return None
    msg = "quiver is not connected; results are computed for the whole presentation"
    warnings.warn(msg, DisconnectedQuiverWarning, stacklevel=2)
    return msg
