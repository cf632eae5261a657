"""Overlap sets R^n and the Bardzell bimodule resolution of a monomial algebra.

R^0 are the vertices, R^1 the arrows, R^2 the relations.  An element of R^n
(n >= 3) is R^{n-1} u where u comes from a maximal overlap of a relation with
the tail of R^{n-1}: the part appended at the previous step, or the relation
minus its first arrow when n = 3.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Optional

import networkx as nx

from .algebra import MonomialPresentation
from .errors import ConsistencyError
from .quiver import Path, compose


@dataclass(frozen=True)
class OverlapElement:
    path: Path
    level: int
    # (index into level n-1, relation used, appended tail u) for level >= 3
    provenance: Optional[tuple] = None
    # the part a relation must overlap to build the next level
    tail: Optional[Path] = None

    def __str__(self):
        return str(self.path)


@dataclass(frozen=True)
class OverlapLevels:
    presentation: MonomialPresentation
    levels: tuple

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def __getitem__(self, n):
        return self.levels[n]

    def paths(self, n) -> list:
        return [e.path for e in self.levels[n]]

    def index_of(self, n, path) -> int:
        lookup = self._lookup(n)
        return lookup[path]

    def _lookup(self, n):
        cache = self.__dict__.setdefault("_lookups", {})
        if n not in cache:
            cache[n] = {e.path: i for i, e in enumerate(self.levels[n])}
        return cache[n]


@dataclass(frozen=True)
class BimodDiffTerm:
    left: Path
    summand: int
    right: Path
    sign: int


def maximal_overlaps(p: MonomialPresentation, tail: Path) -> list:
    """Pairs (relation, u) with relation overlapping ``tail`` maximally, tail u being the overlap."""
    cands = []
    t = tail.arrows
    lt = len(t)
    for q in p.rho:
        qa = q.arrows
        for s in range(lt):
            k = lt - s
            if len(qa) > k and qa[:k] == t[s:]:
                cands.append((q, q.sub(k, len(q))))
    out = []
    for q, u in cands:
        # a shorter candidate that is a prefix of u means tail u is not minimal
        if any(len(u2) < len(u) and u.arrows[: len(u2)] == u2.arrows for _, u2 in cands):
            continue
        out.append((q, u))
    return out


def compute_overlaps(p: MonomialPresentation, n_max: int = 12) -> OverlapLevels:
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    q = p.quiver
    lv0 = tuple(OverlapElement(Path.trivial(v), 0) for v in q.sorted_vertices())
    lv1 = tuple(
        OverlapElement(q.arrow_path(a.id), 1) for a in sorted(q.arrows, key=lambda a: a.id)
    )
    lv2 = tuple(OverlapElement(r, 2, tail=r.sub(1, len(r))) for r in p.rho)
    levels = [lv0, lv1, lv2]
    by_tail = {}
    for n in range(3, n_max + 1):
        new = []
        for idx, elem in enumerate(levels[n - 1]):
            found = by_tail.get(elem.tail)
            if found is None:
                found = by_tail[elem.tail] = maximal_overlaps(p, elem.tail)
            for rel, u in found:
                new.append(OverlapElement(compose(elem.path, u), n, (idx, rel, u), u))
        new.sort(key=lambda e: e.path.key())
        levels.append(tuple(new))
    return OverlapLevels(p, tuple(levels))


def uniqueness_check(levels) -> list:
    """Pairs (n, i, j) where element i of level n equals or is a proper prefix of element j."""
    raw = levels.levels if isinstance(levels, OverlapLevels) else levels
    out = []
    for n, lv in enumerate(raw):
        # in lexicographic order the extensions of a path directly follow it
        order = sorted(range(len(lv)), key=lambda i: (lv[i].path.arrows, lv[i].path.base, i))
        for pos, i in enumerate(order):
            pa = lv[i].path
            for j in order[pos + 1 :]:
                pb = lv[j].path
                if pb.arrows[: len(pa)] != pa.arrows or (not pa.arrows and pb.base != pa.base):
                    break
                if pa == pb:
                    out.append((n, min(i, j), max(i, j)))
                elif len(pa) < len(pb):
                    out.append((n, i, j))
    return out


def degree_profile(levels: OverlapLevels) -> list:
    return [{len(e.path) for e in lv} for lv in levels.levels]


@dataclass(frozen=True)
class GldimBound:
    """Either the exact global dimension or a lower bound."""

    value: int
    exact: bool

    def __str__(self):
        return str(self.value) if self.exact else f">= {self.value}"


def gldim_probe(levels: OverlapLevels) -> GldimBound:
    for n, lv in enumerate(levels.levels):
        if not lv:
            return GldimBound(n - 1, True)
    return GldimBound(levels.depth, False)


def tail_automaton(p: MonomialPresentation) -> tuple:
    """Graph on tails; level n >= 3 is nonempty iff a walk of length n-2 leaves a start state."""
    g = nx.DiGraph()
    starts = {r.sub(1, len(r)) for r in p.rho}
    todo = list(starts)
    seen = set(starts)
    g.add_nodes_from(starts)
    while todo:
        t = todo.pop()
        for _, u in maximal_overlaps(p, t):
            g.add_edge(t, u)
            if u not in seen:
                seen.add(u)
                todo.append(u)
    return g, starts


def global_dimension(p: MonomialPresentation) -> Optional[int]:
    """Exact global dimension; None when it is infinite."""
    if not p.quiver.arrows:
        return 0
    if not p.rho:
        return 1
    g, starts = tail_automaton(p)
    if not nx.is_directed_acyclic_graph(g):
        # every tail is reachable from a start state, so a cycle means infinite depth
        return None
    longest = {}
    for node in reversed(list(nx.topological_sort(g))):
        longest[node] = max((1 + longest[s] for s in g.successors(node)), default=0)
    return 2 + max(longest[s] for s in starts)


def _find_suffix(levels: OverlapLevels, n: int, path: Path) -> list:
    return [i for i, e in enumerate(levels[n]) if path.ends_with(e.path)]


def _find_prefix(levels: OverlapLevels, n: int, path: Path) -> list:
    return [i for i, e in enumerate(levels[n]) if path.starts_with(e.path)]


def bardzell_differential(levels: OverlapLevels, n: int, i: int) -> list:
    """Terms of the differential P^n -> P^{n-1} on generator i of level n."""
    if not 1 <= n <= levels.depth:
        raise IndexError(f"level {n} outside 1..{levels.depth}")
    if not 0 <= i < len(levels[n]):
        raise IndexError(f"level {n} has no element {i}")
    R = levels[n][i].path
    lower = levels[n - 1]
    if n % 2:
        pre = _find_prefix(levels, n - 1, R)
        suf = _find_suffix(levels, n - 1, R)
        if len(pre) != 1 or len(suf) != 1:
            raise ConsistencyError(f"{R} does not have a unique level-{n - 1} prefix and suffix")
        j, k = pre[0], suf[0]
        lj, lk = len(lower[j].path), len(lower[k].path)
        return [
            BimodDiffTerm(Path.trivial(R.source), j, R.sub(lj, len(R)), 1),
            BimodDiffTerm(R.sub(0, len(R) - lk), k, Path.trivial(R.target), -1),
        ]
    terms = []
    for j, e in enumerate(lower):
        m = len(e.path)
        for s in R.occurrences(e.path):
            terms.append(BimodDiffTerm(R.sub(0, s), j, R.sub(s + m, len(R)), 1))
    terms.sort(key=lambda t: (len(t.left), t.summand))
    return terms


def compose_differentials(levels: OverlapLevels, n: int, i: int, differential=None) -> dict:
    """The formal sum d^{n-1}(d^n(generator)), reduced in the algebra; zero terms dropped."""
    differential = differential or bardzell_differential
    p = levels.presentation
    acc = defaultdict(int)
    for t in differential(levels, n, i):
        for t2 in differential(levels, n - 1, t.summand):
            left = compose(t.left, t2.left)
            right = compose(t2.right, t.right)
            if p.is_zero(left) or p.is_zero(right):
                continue
            acc[(left, t2.summand, right)] += t.sign * t2.sign
    return {k: v for k, v in acc.items() if v}


def d_squared_check(levels: OverlapLevels, n_max: int, differential: Callable = None) -> bool:
    top = min(n_max, levels.depth)
    for n in range(2, top + 1):
        for i in range(len(levels[n])):
            if compose_differentials(levels, n, i, differential):
                return False
    return True
