"""The dual quiver Gamma, the relations sigma and the graded algebra B.

An arrow of Gamma is written ``~x.y`` for the length-A path ``x y`` of Q and
runs backwards.  For a Q-path p that is an A-path, ``bar(p)`` is the Gamma-path
obtained by reversing its A-segments.

With A > 1 the degree-1 part of B is spanned by the reversed arrows of Q, so
that it has dimension |Q_1| like Ext^1.  These elements use the marker ``~a``
and never meet Gamma arrows in a product: every product with a degree-1
factor of positive degree is zero in that regime.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

from .algebra import MonomialPresentation, normal_words_up_to
from .classification import AlgebraClass, Kind, delta
from .errors import RegimeMismatchError, ScopeError
from .quiver import Arrow, Path, Quiver, compose, enumerate_paths


def gamma_id(alpha: Path) -> str:
    return "~" + ".".join(alpha.arrows)


@dataclass(frozen=True, eq=False)
class DualPresentation:
    source: MonomialPresentation
    A: int
    d: int
    gamma: Quiver
    sigma: tuple
    back_map: dict  # Gamma arrow id -> Q_A path
    forward_map: dict  # Q_A arrow tuple -> Gamma arrow id

    @property
    def algebra(self) -> MonomialPresentation:
        """K Gamma / (sigma) as a monomial presentation."""
        cached = self.__dict__.get("_algebra")
        if cached is None:
            cached = MonomialPresentation(self.gamma, self.sigma)
            self.__dict__["_algebra"] = cached
        return cached

    def delta(self, n: int) -> int:
        """Gamma-length of degree-n elements (for A > 1, n = 1 is special-cased)."""
        return delta(self.d, n)


def build_dual(p: MonomialPresentation, A: int, d: int) -> DualPresentation:
    q = p.quiver
    back, fwd, arrows = {}, {}, []
    for alpha in enumerate_paths(q, A):
        gid = gamma_id(alpha)
        back[gid] = alpha
        fwd[alpha.arrows] = gid
        arrows.append(Arrow(gid, alpha.target, alpha.source))
    gamma = Quiver(q.sorted_vertices(), arrows)
    words = p.relation_words
    sigma = []
    for w in enumerate_paths(q, A * d):
        if w.arrows not in words:
            sigma.append(bar_with(fwd, gamma, w, A))
    return DualPresentation(p, A, d, gamma, tuple(sorted(sigma)), back, fwd)


def bar_with(fwd, gamma, p: Path, A: int) -> Path:
    if len(p) == 0:
        return Path.trivial(p.source)
    segs = [p.arrows[i : i + A] for i in range(0, len(p), A)]
    return gamma.path([fwd[s] for s in reversed(segs)])


def bar(dp: DualPresentation, p: Path) -> Path:
    """Reverse an A-path of Q into Gamma; a single arrow maps to its degree-1 marker when A > 1."""
    if dp.A > 1 and len(p) == 1:
        return arrow_marker(dp.source.quiver.arrow(p.arrows[0]))
    return bar_with(dp.forward_map, dp.gamma, p, dp.A)


def unbar(dp: DualPresentation, gp: Path) -> Path:
    if len(gp) == 0:
        return Path.trivial(gp.source)
    if dp.A > 1 and len(gp) == 1 and gp.arrows[0] not in dp.back_map:
        return dp.source.quiver.arrow_path(gp.arrows[0][1:])
    q = dp.source.quiver
    arrows = []
    for gid in reversed(gp.arrows):
        arrows.extend(dp.back_map[gid].arrows)
    return q.path(arrows)


def arrow_marker(a: Arrow) -> Path:
    return Path(("~" + a.id,), (a.target, a.source))


def b_basis(dp: DualPresentation, d: int, A: int, n: int) -> list:
    """Basis of B_n: sigma-avoiding Gamma-paths of length delta(n)."""
    if (d, A) != (dp.d, dp.A):
        raise RegimeMismatchError(f"dual was built for d={dp.d}, A={dp.A}")
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if A > 1 and n == 1:
        q = dp.source.quiver
        return sorted(arrow_marker(a) for a in q.arrows)
    L = delta(d, n)
    return normal_words_up_to(dp.algebra, L).get(L, [])


def element_degree(dp: DualPresentation, gp: Path) -> Optional[int]:
    """The degree n with delta(n) = len(gp), or None."""
    L = len(gp)
    if dp.A > 1 and L == 1:
        return 1 if gp.arrows[0] not in dp.back_map else None
    if L <= 1:
        return L
    d = dp.d
    if L % d == 0:
        return 2 * L // d
    if (L - 1) % d == 0:
        return 2 * (L - 1) // d + 1
    return None


class RegimeKind(str, Enum):
    KOSZUL2 = "Koszul2"
    DKOSZUL = "DKoszul"
    DA = "DA"


@dataclass(frozen=True)
class Regime:
    kind: RegimeKind
    d: int
    A: int = 1

    @property
    def test_degrees(self) -> tuple:
        """Degrees whose basis elements generate B together with degree 0."""
        if self.kind is RegimeKind.KOSZUL2:
            return (1,)
        if self.kind is RegimeKind.DKOSZUL:
            return (1, 2)
        # degree 1 only constrains degree-0 elements; higher products with it vanish
        return (1, 2, 3)


def regime_for(cls: AlgebraClass) -> Regime:
    if cls.kind is Kind.DKOSZUL:
        if cls.d == 2:
            return Regime(RegimeKind.KOSZUL2, 2, 1)
        return Regime(RegimeKind.DKOSZUL, cls.d, 1)
    if cls.kind is Kind.DA_STACKED:
        if cls.d == 2:
            raise ScopeError(
                f"B is not a model of the Ext algebra when D = 2A (D={cls.D}, A={cls.A})"
            )
        return Regime(RegimeKind.DA, cls.d, cls.A)
    raise ScopeError(f"no B-model for class {cls.kind.value}")


def check_regime(regime: Regime, dp: DualPresentation) -> None:
    if (regime.d, regime.A) != (dp.d, dp.A):
        raise RegimeMismatchError(f"regime d={regime.d}, A={regime.A} does not match the dual")
    expected = {
        RegimeKind.KOSZUL2: regime.d == 2 and regime.A == 1,
        RegimeKind.DKOSZUL: regime.d >= 3 and regime.A == 1,
        RegimeKind.DA: regime.d >= 3 and regime.A > 1,
    }[regime.kind]
    if not expected:
        raise RegimeMismatchError(f"{regime.kind.value} does not allow d={regime.d}, A={regime.A}")


@dataclass(frozen=True)
class BElement:
    degree: int
    terms: dict = field(default_factory=dict)

    @classmethod
    def basis(cls, degree: int, path: Path, coeff=1) -> "BElement":
        return cls(degree, {path: Fraction(coeff)})

    @classmethod
    def zero(cls, degree: int) -> "BElement":
        return cls(degree, {})

    def is_zero(self) -> bool:
        return not any(self.terms.values())

    def __add__(self, other: "BElement") -> "BElement":
        if self.degree != other.degree:
            raise ValueError("cannot add elements of different degrees")
        out = dict(self.terms)
        for k, v in other.terms.items():
            nv = out.get(k, 0) + v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return BElement(self.degree, out)

    def scale(self, c) -> "BElement":
        c = Fraction(c)
        if not c:
            return BElement(self.degree, {})
        return BElement(self.degree, {k: v * c for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + other.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, BElement):
            return NotImplemented
        a = {k: v for k, v in self.terms.items() if v}
        b = {k: v for k, v in other.terms.items() if v}
        return self.degree == other.degree and a == b

    def __hash__(self):
        return hash((self.degree, frozenset((k, v) for k, v in self.terms.items() if v)))

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in sorted(self.terms, key=lambda p: p.key()):
            c = self.terms[k]
            coef = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            parts.append(f"{coef}[{k}]")
        return " + ".join(parts)


def _product_vanishes(regime: Regime, n: int, m: int) -> bool:
    if regime.kind is RegimeKind.KOSZUL2:
        return False
    if n % 2 and m % 2:
        return True
    if regime.kind is RegimeKind.DA and (n == 1 or m == 1) and n >= 1 and m >= 1:
        return True
    return False


def path_product(dp: DualPresentation, x: Path, y: Path) -> Optional[Path]:
    """x y in K Gamma / (sigma), or None when it is zero."""
    if x.target != y.source:
        return None
    xy = compose(x, y)
    if dp.algebra.is_zero(xy):
        return None
    return xy


def b_product(x: BElement, y: BElement, regime: Regime, dp: DualPresentation) -> BElement:
    check_regime(regime, dp)
    deg = x.degree + y.degree
    if _product_vanishes(regime, x.degree, y.degree):
        return BElement.zero(deg)
    out = {}
    for px, cx in x.terms.items():
        for py, cy in y.terms.items():
            xy = path_product(dp, px, py)
            if xy is None:
                continue
            out[xy] = out.get(xy, 0) + cx * cy
    return BElement(deg, {k: v for k, v in out.items() if v})


@dataclass(frozen=True)
class MultiDegree:
    items: tuple  # sorted (segment string, count) with count > 0

    @property
    def counts(self) -> dict:
        return dict(self.items)

    @property
    def total(self) -> int:
        return sum(c for _, c in self.items)

    def get(self, alpha) -> int:
        return self.counts.get(str(alpha), 0)

    def __add__(self, other):
        c = self.counts
        for k, v in other.items:
            c[k] = c.get(k, 0) + v
        return MultiDegree(tuple(sorted(c.items())))


def multidegree(gp: Path, dp: DualPresentation) -> MultiDegree:
    c = {}
    for gid in gp.arrows:
        alpha = dp.back_map.get(gid)
        if alpha is None:
            continue  # degree-1 marker when A > 1: not an A-path
        key = str(alpha)
        c[key] = c.get(key, 0) + 1
    return MultiDegree(tuple(sorted(c.items())))


def bijection_check(levels, dp: DualPresentation, d: int, A: int, n_max: int) -> bool:
    return not bijection_failures(levels, dp, d, A, n_max)


def bijection_failures(levels, dp: DualPresentation, d: int, A: int, n_max: int) -> list:
    """Degrees n where the reversed overlap set differs from the B_n basis."""
    bad = []
    top = min(n_max, levels.depth)
    for n in range(top + 1):
        basis = b_basis(dp, d, A, n)
        bset = set(basis)
        L = delta(d, n) if not (A > 1 and n == 1) else 1
        reversed_ok = True
        for e in levels[n]:
            gp = bar(dp, e.path)
            if len(gp) != L or gp not in bset:
                reversed_ok = False
                break
        if not reversed_ok or len(levels[n]) != len(basis):
            bad.append((n, len(levels[n]), len(basis)))
    return bad
