"""d-Koszul and (D,A)-stacked recognition for monomial presentations."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .algebra import MonomialPresentation
from .errors import ConsistencyError, PreconditionError
from .resolution import OverlapLevels, compute_overlaps, degree_profile, global_dimension, gldim_probe


class EmptyRelationsError(PreconditionError, ValueError):
    pass


def delta(d: int, n: int) -> int:
    if n <= 1:
        return n
    if n % 2 == 0:
        return n * d // 2
    return (n - 1) * d // 2 + 1


def delta_A(D: int, A: int, n: int) -> int:
    if n <= 1:
        return n
    if n % 2 == 0:
        return n * D // 2
    return (n - 1) * D // 2 + A


@dataclass(frozen=True)
class Homogeneity:
    length: Optional[int]
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.length is not None


def homogeneity(p: MonomialPresentation) -> Homogeneity:
    if not p.rho:
        raise EmptyRelationsError("homogeneity is undefined for an empty relation set")
    first = p.rho[0]
    for r in p.rho[1:]:
        if len(r) != len(first):
            return Homogeneity(None, (first, r))
    return Homogeneity(len(first))


@dataclass(frozen=True)
class CoveringResult:
    ok: bool
    witness: Optional[tuple] = None  # (pq, qr, offending window)

    def __bool__(self):
        return self.ok


def is_d_covering(p: MonomialPresentation, d: int) -> CoveringResult:
    """Whenever pq, qr are relations with 1 <= len(q) < d, every length-d window of pqr is a relation."""
    words = p.relation_words
    for r1 in p.rho:
        for r2 in p.rho:
            a1, a2 = r1.arrows, r2.arrows
            for k in range(1, d):
                if a1[len(a1) - k :] != a2[:k]:
                    continue
                w = a1 + a2[k:]
                for s in range(len(w) - d + 1):
                    if w[s : s + d] not in words:
                        full = p.quiver.path(w)
                        return CoveringResult(False, (r1, r2, full.sub(s, s + d)))
    return CoveringResult(True)


@dataclass(frozen=True)
class StackedResult:
    D: Optional[int] = None
    A: Optional[int] = None
    diagnostic: Optional[str] = None

    def __bool__(self):
        return self.D is not None

    @property
    def params(self):
        return (self.D, self.A) if self else None


def proper_overlaps(p: MonomialPresentation):
    """Triples (r1, r2, u) where r2 properly overlaps r1 with overlap r1 u."""
    for r1 in p.rho:
        for r2 in p.rho:
            a1, a2 = r1.arrows, r2.arrows
            # v = r1[:s] with s >= 1; shared part r1[s:] must be a proper prefix of r2
            for s in range(1, len(a1)):
                k = len(a1) - s
                if k < len(a2) and a1[s:] == a2[:k]:
                    yield r1, r2, r2.sub(k, len(r2))


def detect_da_stacked(p: MonomialPresentation, levels: OverlapLevels) -> StackedResult:
    h = homogeneity(p)
    if not h:
        return StackedResult(diagnostic=f"relations {h.witness[0]} and {h.witness[1]} differ in length")
    D = h.length
    if levels.depth < 3 or not levels[3]:
        return StackedResult(diagnostic="R^3 is empty, so A cannot be inferred")
    lengths = {len(e.path) for e in levels[3]}
    if len(lengths) != 1:
        return StackedResult(diagnostic=f"level-3 elements have several lengths {sorted(lengths)}")
    A = lengths.pop() - D
    if A < 1 or A >= D:
        return StackedResult(diagnostic=f"inferred A = {A} is outside 1..D-1")
    overlaps = list(proper_overlaps(p))
    short_tails = defaultdict(set)
    for r1, _, u in overlaps:
        if len(u) == A:
            short_tails[r1].add(u.arrows)
    for r1, r2, u in overlaps:
        if len(u) < A:
            return StackedResult(diagnostic=f"{r2} overlaps {r1} with tail {u} shorter than A = {A}")
        if u.arrows[:A] not in short_tails[r1]:
            return StackedResult(
                diagnostic=f"no relation overlaps {r1} with a length-{A} tail that prefixes {u}"
            )
    deep = levels.depth >= 4 and bool(levels[4])
    if deep and D % A:
        return StackedResult(diagnostic=f"A = {A} does not divide D = {D} although gldim >= 4")
    return StackedResult(D, A)


class Kind(str, Enum):
    FINITE_GLDIM = "FiniteGlobalDimension"
    DKOSZUL = "DKoszul"
    DA_STACKED = "DAStacked"
    UNCLASSIFIED = "Unclassified"


@dataclass(frozen=True)
class AlgebraClass:
    kind: Kind
    d: Optional[int] = None
    D: Optional[int] = None
    A: Optional[int] = None
    gldim: Optional[int] = None
    witness: Optional[str] = field(default=None, compare=False)

    def describe(self) -> str:
        if self.kind is Kind.FINITE_GLDIM:
            return f"finite global dimension {self.gldim}"
        if self.kind is Kind.DKOSZUL:
            return f"{self.d}-Koszul, d={self.d}"
        if self.kind is Kind.DA_STACKED:
            return f"(D,A)-stacked, D={self.D}, A={self.A}, d={self.d}"
        return f"unclassified: {self.witness}"

    def delta(self, n: int) -> int:
        if self.kind is Kind.DKOSZUL:
            return delta(self.d, n)
        if self.kind is Kind.DA_STACKED:
            return delta_A(self.D, self.A, n)
        raise ValueError(f"no generation degrees for {self.kind.value}")

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "d": self.d,
            "D": self.D,
            "A": self.A,
            "gldim": self.gldim,
            "witness": self.witness,
        }


def classify(p: MonomialPresentation, levels: Optional[OverlapLevels] = None) -> AlgebraClass:
    if levels is None or levels.depth < 4:
        levels = compute_overlaps(p, max(4, levels.depth if levels else 4))
    gd = global_dimension(p)
    probe = gldim_probe(levels)
    if probe.exact and probe.value != gd:
        raise ConsistencyError(f"level scan gives gldim {probe.value}, tail automaton gives {gd}")
    if gd is not None:
        return AlgebraClass(Kind.FINITE_GLDIM, gldim=gd)
    h = homogeneity(p)
    if not h:
        a, b = h.witness
        return AlgebraClass(Kind.UNCLASSIFIED, witness=f"relations {a} and {b} have different lengths")
    cov = is_d_covering(p, h.length)
    st = detect_da_stacked(p, levels)
    if cov:
        if st.params != (h.length, 1):
            raise ConsistencyError(f"{h.length}-covering but stacked detection gave {st.params or st.diagnostic}")
        return AlgebraClass(Kind.DKOSZUL, d=h.length, D=h.length, A=1)
    if st and st.A > 1:
        return AlgebraClass(Kind.DA_STACKED, d=st.D // st.A, D=st.D, A=st.A)
    if st:
        raise ConsistencyError(f"({st.D},1)-stacked but not {st.D}-covering")
    r1, r2, w = cov.witness
    return AlgebraClass(
        Kind.UNCLASSIFIED,
        witness=f"not {h.length}-covering ({r1} / {r2} give {w}); not stacked: {st.diagnostic}",
    )


def profile_crosscheck(cls: AlgebraClass, levels: OverlapLevels) -> bool:
    if cls.kind not in (Kind.DKOSZUL, Kind.DA_STACKED):
        raise ValueError("profile check needs a d-Koszul or stacked class")
    for n, prof in enumerate(degree_profile(levels)):
        if prof and prof != {cls.delta(n)}:
            return False
    return True
