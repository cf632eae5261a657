"""Loop and trail witnesses, the (Fg) verdict and its certificates."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field, replace
from enum import Enum
from math import gcd
from typing import Optional

import networkx as nx

from .algebra import MonomialPresentation, is_finite_dimensional, require_minimal
from .classification import AlgebraClass, Kind, classify
from .errors import (
    ConsistencyError,
    InfiniteDimensionError,
    NotApplicableError,
    UnfactorizableError,
)
from .quiver import APath, Path, compose, concat, enumerate_paths, power, rotations
from .resolution import OverlapLevels, bardzell_differential, compute_overlaps


class Status(str, Enum):
    OK = "ok"
    VIOLATED = "violated"
    NO_POWER = "no-power-in-rho"


@dataclass(frozen=True)
class LoopWitness:
    cycle: Path
    chosen_rotation: Optional[int] = None
    status: Optional[Status] = None
    violations: tuple = ()

    @property
    def c_j(self) -> Optional[Path]:
        if self.chosen_rotation is None:
            return None
        return rotations(self.cycle)[self.chosen_rotation]

    def to_dict(self):
        return {
            "cycle": str(self.cycle),
            "chosen_rotation": str(self.c_j) if self.c_j is not None else None,
            "status": self.status.value if self.status else None,
            "violations": [[str(r), why] for r, why in self.violations],
        }


@dataclass(frozen=True)
class TrailWitness:
    trail: APath
    rho_T: tuple
    status: Optional[Status] = None
    violations: tuple = ()

    @property
    def m(self) -> int:
        return self.trail.length_a

    def to_dict(self):
        return {
            "trail": str(self.trail),
            "rho_T": [str(r) for r in self.rho_T],
            "status": self.status.value if self.status else None,
            "violations": [[str(r), why] for r, why in self.violations],
        }


@dataclass(frozen=True)
class HHGenerator:
    kind: str  # "loop" or "trail"
    degree: int
    support: tuple
    mu: int
    source: str

    def value_on(self, path: Path):
        """The vertex the representing map sends ``path`` to, or None."""
        return path.source if path in self.support else None

    def to_dict(self):
        return {
            "kind": self.kind,
            "degree": self.degree,
            "mu": self.mu,
            "source": self.source,
            "support": [str(s) for s in self.support],
        }


class Verdict(str, Enum):
    SATISFIED = "Satisfied"
    VIOLATED = "Violated"
    TRIVIAL = "SatisfiedTrivially"
    UNKNOWN = "UnknownScope"


@dataclass(frozen=True)
class FactorizationStep:
    element: Path
    level: int
    generators: tuple  # generator index per strip, in order
    remainder: Path
    remainder_level: int

    def to_dict(self):
        return {
            "element": str(self.element),
            "level": self.level,
            "generators": list(self.generators),
            "remainder": str(self.remainder),
            "remainder_level": self.remainder_level,
        }


@dataclass(frozen=True)
class FgReport:
    cls: AlgebraClass
    verdict: Verdict
    loops: tuple = ()
    trails: tuple = ()
    generators: tuple = ()
    bound_N: Optional[int] = None
    reason: Optional[str] = None
    notes: tuple = ()
    factorization_log: tuple = field(default=(), compare=False)

    @property
    def A(self):
        return self.cls.A

    @property
    def d(self):
        return self.cls.d


def _canonical_rotation(p: Path) -> Path:
    return min(rotations(p), key=lambda r: r.arrows)


def _closed_paths(p: MonomialPresentation, length: int) -> list:
    return [x for x in enumerate_paths(p.quiver, length) if x.is_closed]


def find_a_loops(p: MonomialPresentation, A: int, d: int) -> list:
    """One witness per rotation class of closed paths of length A."""
    classes = sorted({_canonical_rotation(c) for c in _closed_paths(p, A)}, key=lambda c: c.arrows)
    words = p.relation_words
    out = []
    for c in classes:
        hits = [j for j, cj in enumerate(rotations(c)) if power(cj, d).arrows in words]
        if not hits:
            out.append(LoopWitness(c, None, Status.NO_POWER))
        elif len(hits) > 1 and len({rotations(c)[j].arrows for j in hits}) > 1:
            raise ConsistencyError(f"several rotations of {c} have their {d}-th power in rho")
        else:
            out.append(LoopWitness(c, hits[0]))
    return out


def check_loop_condition(w: LoopWitness, p: MonomialPresentation, A: int, d: int) -> LoopWitness:
    if w.status is Status.NO_POWER:
        return w
    cj = w.c_j
    if cj is None:
        raise ValueError("loop witness has no chosen rotation")
    stem = power(cj, d - 1).arrows
    k = len(stem)
    bad = []
    for r in p.rho:
        a = r.arrows
        if len(a) != k + A:
            continue
        if a[:k] == stem and a[k:] != cj.arrows:
            bad.append((r, "begins-with"))
        if a[A:] == stem and a[:A] != cj.arrows:
            bad.append((r, "ends-with"))
    return replace(w, status=Status.VIOLATED if bad else Status.OK, violations=tuple(bad))


def shift_graph(p: MonomialPresentation, A: int) -> nx.DiGraph:
    """Edge r -> r' when r' is r shifted one A-segment to the left."""
    g = nx.DiGraph()
    g.add_nodes_from(p.rho)
    by_prefix = defaultdict(list)
    for r in p.rho:
        by_prefix[r.arrows[: len(r) - A]].append(r)
    for r in p.rho:
        for r2 in by_prefix.get(r.arrows[A:], []):
            g.add_edge(r, r2)
    return g


def _canonical_trail(t: APath) -> APath:
    return min(rotations(t), key=lambda r: tuple(s.arrows for s in r.segments))


def find_fg_trails(p: MonomialPresentation, A: int, d: int) -> list:
    g = shift_graph(p, A)
    found = {}
    for cyc in nx.simple_cycles(g):
        if len(cyc) < 2:
            continue
        segs = tuple(r.sub(0, A) for r in cyc)
        if len({s.arrows for s in segs}) != len(segs):
            continue
        t = _canonical_trail(APath(segs, A))
        key = tuple(s.arrows for s in t.segments)
        if key not in found:
            found[key] = TrailWitness(t, tuple(sorted(cyc)))
    return [found[k] for k in sorted(found)]


def rho_T(trail: APath, d: int) -> tuple:
    """All A-paths of A-length d lying on the closed A-trail."""
    segs = trail.segments
    m = len(segs)
    return tuple(sorted({concat([segs[(i + k) % m] for k in range(d)]) for i in range(m)}))


def check_trail_condition(w: TrailWitness, p: MonomialPresentation) -> TrailWitness:
    A = w.trail.A
    segs = {s.arrows for s in w.trail.segments}
    inside = set(w.rho_T)
    bad = []
    for r in p.rho:
        if r in inside:
            continue
        if r.arrows[:A] in segs:
            bad.append((r, "begins-with"))
        if r.arrows[len(r) - A :] in segs:
            bad.append((r, "ends-with"))
    return replace(w, status=Status.VIOLATED if bad else Status.OK, violations=tuple(bad))


def witnesses(p: MonomialPresentation, cls: AlgebraClass) -> tuple:
    A, d = cls.A, cls.d
    loops = [check_loop_condition(w, p, A, d) for w in find_a_loops(p, A, d)]
    if A == 1 and any(w.status is Status.NO_POWER for w in loops):
        raise ConsistencyError("a loop of a finite dimensional d-Koszul algebra has no power in rho")
    trails = [check_trail_condition(w, p) for w in find_fg_trails(p, A, d)]
    return tuple(loops), tuple(trails)


NECESSITY_NOTE = (
    "the Violated verdict uses the equivalence with (Fg), which is proved over an "
    "algebraically closed field; the Satisfied verdict holds over any field"
)


def decide_fg(p: MonomialPresentation, levels: Optional[OverlapLevels] = None) -> FgReport:
    fd = is_finite_dimensional(p)
    if not fd:
        raise InfiniteDimensionError(f"algebra is infinite dimensional; {fd.witness} can be pumped")
    require_minimal(p)
    if levels is None:
        levels = compute_overlaps(p, 4)
    cls = classify(p, levels)
    if cls.kind is Kind.FINITE_GLDIM:
        return FgReport(cls, Verdict.TRIVIAL, reason=f"global dimension {cls.gldim} is finite")
    if cls.kind is Kind.UNCLASSIFIED:
        return FgReport(cls, Verdict.UNKNOWN, reason="algebra is neither d-Koszul nor (D,A)-stacked")
    loops, trails = witnesses(p, cls)
    failed = [w for w in loops + trails if w.status is Status.VIOLATED]
    if not failed:
        report = FgReport(cls, Verdict.SATISFIED, loops, trails, reason="Condition holds")
        gens = hochschild_generators(report, cls.d)
        N = generating_bound(gens, p.quiver, cls.A)
        return replace(report, generators=tuple(gens), bound_N=N)
    if cls.A == 1 or cls.D != 2 * cls.A:
        return FgReport(
            cls, Verdict.VIOLATED, loops, trails,
            reason=f"{len(failed)} witness(es) fail the Condition",
            notes=(NECESSITY_NOTE,),
        )
    return FgReport(
        cls, Verdict.UNKNOWN, loops, trails,
        reason="Condition fails with A > 1 and D = 2A, where its necessity is not known",
    )


def hochschild_generators(report: FgReport, d: int) -> list:
    if report.verdict is not Verdict.SATISFIED:
        raise NotApplicableError(f"generators are only described for Satisfied verdicts, not {report.verdict.value}")
    gens = []
    for w in report.loops:
        if w.status is Status.OK:
            gens.append(HHGenerator("loop", 2, (power(w.c_j, d),), 1, str(w.cycle)))
    for w in report.trails:
        m = w.m
        g = gcd(d, m)
        support = tuple(sorted(power(t.path(), d // g) for t in rotations(w.trail)))
        gens.append(HHGenerator("trail", 2 * (m // g), support, m // g, str(w.trail)))
    return gens


def generating_bound(generators, quiver, A: int) -> int:
    if isinstance(generators, FgReport):
        generators = generators.generators
    n_qa = len(enumerate_paths(quiver, A))
    return max([3, n_qa] + [x.degree for x in generators])


def _support_order(generators) -> list:
    pairs = [(s, i) for i, x in enumerate(generators) for s in x.support]
    pairs.sort(key=lambda si: (-len(si[0]), si[0].arrows, si[1]))
    return pairs


def factor_element(levels: OverlapLevels, generators, N: int, R: Path, n: int) -> FactorizationStep:
    order = _support_order(generators)
    used = []
    cur, level = R, n
    while level > N:
        tried = []
        for s, i in order:
            target = level - generators[i].degree
            if target < 0 or not cur.starts_with(s):
                continue
            rem = cur.sub(len(s), len(cur))
            if rem in levels._lookup(target):
                used.append(i)
                cur, level = rem, target
                break
            tried.append(f"x_{i + 1} leaves {rem} outside R^{target}")
        else:
            detail = "; ".join(tried) or "no generator support is a prefix"
            raise UnfactorizableError(
                R, n,
                f"cannot factor {R} (level {n}) after {len(used)} strip(s): remainder {cur} "
                f"at level {level}: {detail}",
            )
    return FactorizationStep(R, n, tuple(used), cur, level)


def verify_finite_generation(levels: OverlapLevels, report: FgReport, n_test: int) -> list:
    if report.verdict is not Verdict.SATISFIED:
        raise NotApplicableError("finite generation certificates need a Satisfied verdict")
    if levels.depth < n_test:
        levels = compute_overlaps(levels.presentation, n_test)
    log = []
    for n in range(report.bound_N + 1, n_test + 1):
        for e in levels[n]:
            log.append(factor_element(levels, report.generators, report.bound_N, e.path, n))
    return log


def cocycle_residue(support, degree: int, levels: OverlapLevels) -> dict:
    """Nonzero values of (map sending support paths to their source) composed with the next differential."""
    if levels.depth < degree + 1:
        levels = compute_overlaps(levels.presentation, degree + 1)
    p = levels.presentation
    supp = set(support)
    lower = levels[degree]
    out = {}
    for i, e in enumerate(levels[degree + 1]):
        acc = defaultdict(int)
        for t in bardzell_differential(levels, degree + 1, i):
            if lower[t.summand].path not in supp:
                continue
            val = compose(t.left, t.right)
            if not p.is_zero(val):
                acc[val] += t.sign
        acc = {k: v for k, v in acc.items() if v}
        if acc:
            out[e.path] = acc
    return out


def cocycle_check(gen: HHGenerator, levels: OverlapLevels) -> bool:
    return not cocycle_residue(gen.support, gen.degree, levels)
