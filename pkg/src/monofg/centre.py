"""Graded centre of B in bounded degree, the centrality lemmas, and a finite-generation probe."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .classification import delta
from .dual import (
    BElement,
    DualPresentation,
    Regime,
    b_basis,
    b_product,
    bar,
    check_regime,
    multidegree,
)
from .errors import SideConditionError
from .fg import FgReport, Status, rho_T
from .linalg import nullspace, rank
from .quiver import APath, power, rotations


def _sign(a: int, b: int) -> int:
    return -1 if (a * b) % 2 else 1


def _test_elements(dp: DualPresentation, regime: Regime) -> list:
    out = []
    for t in (0,) + regime.test_degrees:
        out.extend(BElement.basis(t, y) for y in b_basis(dp, dp.d, dp.A, t))
    return out


def commutator(z: BElement, y: BElement, regime: Regime, dp: DualPresentation) -> BElement:
    """z y - (-1)^{|z||y|} y z."""
    return b_product(z, y, regime, dp) - b_product(y, z, regime, dp).scale(_sign(z.degree, y.degree))


def is_central(z: BElement, dp: DualPresentation, regime: Regime) -> bool:
    check_regime(regime, dp)
    return all(commutator(z, y, regime, dp).is_zero() for y in _test_elements(dp, regime))


@dataclass(frozen=True)
class CentreBasis:
    by_degree: dict

    def elements(self, lo: int = 0, hi: Optional[int] = None) -> list:
        return [
            z
            for k in sorted(self.by_degree)
            if k >= lo and (hi is None or k <= hi)
            for z in self.by_degree[k]
        ]


def centre_in_degree(dp: DualPresentation, regime: Regime, k: int) -> list:
    cycles = [c for c in b_basis(dp, dp.d, dp.A, k) if c.is_closed]
    tests = _test_elements(dp, regime)
    blocks = defaultdict(list)
    for c in cycles:
        blocks[multidegree(c, dp)].append(c)
    out = []
    for md in sorted(blocks, key=lambda m: m.items):
        cols = blocks[md]
        rows = defaultdict(dict)
        for j, c in enumerate(cols):
            z = BElement.basis(k, c)
            for ti, y in enumerate(tests):
                for path, v in commutator(z, y, regime, dp).terms.items():
                    row = rows[(ti, path)]
                    row[j] = row.get(j, 0) + v
        for vec in nullspace(rows.values(), list(range(len(cols)))):
            out.append(BElement(k, {cols[j]: v for j, v in vec.items()}))
    return out


def centre_basis(dp: DualPresentation, regime: Regime, k_max: int) -> CentreBasis:
    check_regime(regime, dp)
    return CentreBasis({k: centre_in_degree(dp, regime, k) for k in range(k_max + 1)})


@dataclass(frozen=True)
class CentreCandidate:
    kind: str  # "loop-power" or "trail-sum"
    data: tuple
    element: BElement


def loop_power_candidate(c, n: int, dp: DualPresentation) -> CentreCandidate:
    """The power of c-bar of length delta(n), as an element of degree n."""
    if len(c) != dp.A or not c.is_closed:
        raise ValueError(f"{c} is not a closed path of length {dp.A}")
    cb = bar(dp, c)
    L = delta(dp.d, n)
    return CentreCandidate("loop-power", (c, n), BElement.basis(n, power(cb, L)))


def solve_delta(d: int, length: int) -> Optional[int]:
    """The u >= 2 with delta(u) = length, if any."""
    if length >= d and length % d == 0:
        return 2 * length // d
    if length > d and (length - 1) % d == 0:
        return 2 * (length - 1) // d + 1
    return None


def trail_sum_candidate(T: APath, j: int, dp: DualPresentation) -> CentreCandidate:
    """z_j: the sum over rotations T_i of bar(T_i)^j."""
    n = T.length_a
    u = solve_delta(dp.d, n * j)
    if u is None:
        raise SideConditionError(f"{n}*{j} = {n * j} is not delta(u) for any u >= 2")
    if dp.d == 2 and dp.A == 1 and u % 2:
        raise SideConditionError(f"d = 2 needs n*j even, got {n * j}")
    terms = {}
    for Ti in rotations(T):
        gp = power(bar(dp, Ti.path()), j)
        terms[gp] = terms.get(gp, 0) + Fraction(1)
    return CentreCandidate("trail-sum", (T, j, u), BElement(u, terms))


def trail_lemma_applies(T: APath, p, A: int, d: int) -> bool:
    """Lemma assumptions: no segment is closed, and no proper A-subcycle q has rho_q in rho."""
    segs = T.segments
    if any(s.is_closed for s in segs):
        return False
    m = len(segs)
    words = p.relation_words
    for i in range(m):
        for length in range(2, m):
            sub = [segs[(i + k) % m] for k in range(length)]
            if sub[0].source != sub[-1].target:
                continue
            q = APath(tuple(sub), A)
            if all(r.arrows in words for r in rho_T(q, d)):
                return False
    return True


@dataclass(frozen=True)
class LemmaOutcome:
    kind: str
    subject: str
    degree: int
    central: bool
    expected: bool

    @property
    def ok(self) -> bool:
        return self.central == self.expected


def lemma_outcomes(p, dp: DualPresentation, report: FgReport, bound: int, regime: Regime) -> tuple:
    """Compare candidate centrality with Condition status; returns (outcomes, not_applicable)."""
    out, skipped = [], []
    d = dp.d
    koszul2 = d == 2 and dp.A == 1
    for w in report.loops:
        if w.status is Status.NO_POWER:
            continue
        holds = w.status is Status.OK
        for n in range(2, bound + 1):
            cand = loop_power_candidate(w.c_j, n, dp)
            expected = holds and (n % 2 == 0 if koszul2 else True)
            out.append(LemmaOutcome("loop", str(w.cycle), n, is_central(cand.element, dp, regime), expected))
    for w in report.trails:
        if not trail_lemma_applies(w.trail, p, dp.A, d):
            skipped.append(str(w.trail))
            continue
        holds = w.status is Status.OK
        m = w.m
        j = 1
        while True:
            u = solve_delta(d, m * j)
            if u is not None and u > bound:
                break
            if m * j > delta(d, bound):
                break
            if u is not None and not (koszul2 and u % 2):
                cand = trail_sum_candidate(w.trail, j, dp)
                out.append(LemmaOutcome("trail", str(w.trail), u, is_central(cand.element, dp, regime), holds))
            j += 1
    return out, skipped


def lemma_check(p, dp: DualPresentation, report: FgReport, bound: int, regime: Regime) -> bool:
    outcomes, _ = lemma_outcomes(p, dp, report, bound, regime)
    return all(o.ok for o in outcomes)


def _vector(x: BElement) -> dict:
    return dict(x.terms)


def fg_over_centre_probe(dp: DualPresentation, regime: Regime, k_max: int, centre: CentreBasis = None) -> list:
    """Per degree k: dim B_k minus the dimension of Z_{>0} B reaching degree k."""
    if centre is None:
        centre = centre_basis(dp, regime, k_max)
    counts = []
    for k in range(k_max + 1):
        basis = b_basis(dp, dp.d, dp.A, k)
        products = []
        for s in range(1, k + 1):
            for z in centre.by_degree.get(s, []):
                for b in b_basis(dp, dp.d, dp.A, k - s):
                    prod = b_product(z, BElement.basis(k - s, b), regime, dp)
                    if not prod.is_zero():
                        products.append(_vector(prod))
        counts.append(len(basis) - rank(products))
    return counts
