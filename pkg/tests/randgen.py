"""Seeded random monomial presentations for property tests."""

from __future__ import annotations

import random

from monofg.algebra import MonomialPresentation, is_finite_dimensional
from monofg.classification import is_d_covering
from monofg.quiver import Arrow, Path, Quiver


def random_quiver(rng: random.Random, max_vertices: int = 4, max_arrows: int = 6) -> Quiver:
    nv = rng.randint(1, max_vertices)
    na = rng.randint(1, max_arrows)
    vertices = [str(i) for i in range(1, nv + 1)]
    arrows = [Arrow(f"x{i}", rng.choice(vertices), rng.choice(vertices)) for i in range(na)]
    return Quiver(vertices, arrows)


def random_walk(rng: random.Random, q: Quiver, length: int):
    starts = [a for a in q.arrows]
    a = rng.choice(starts)
    arrows, verts = [a.id], [a.source, a.target]
    while len(arrows) < length:
        out = q.outgoing(verts[-1])
        if not out:
            return None
        a = rng.choice(out)
        arrows.append(a.id)
        verts.append(a.target)
    return Path(tuple(arrows), tuple(verts))


def minimize(rho) -> list:
    """Drop duplicates and every relation that contains another one."""
    uniq = sorted(set(rho))
    return [r for r in uniq if not any(s != r and r.contains(s) for s in uniq)]


def _cyclic_window(w: Path, start: int, length: int, q: Quiver) -> Path:
    ids = [w.arrows[(start + k) % len(w)] for k in range(length)]
    return q.path(ids)


def make_finite(rng: random.Random, q: Quiver, rho, lengths, max_relations: int = 0) -> list:
    """Add windows of pumpable cycles until the quotient is finite dimensional.

    Returns an empty list once more than ``max_relations`` (if positive) are needed.
    """
    rho = minimize(rho)
    while True:
        if max_relations and len(rho) > max_relations:
            return []
        p = MonomialPresentation(q, rho)
        fd = is_finite_dimensional(p)
        if fd:
            return rho
        w = fd.witness
        L = rng.choice(lengths)
        rho = minimize(rho + [_cyclic_window(w, rng.randrange(len(w)), L, q)])


def random_presentation(seed: int, max_arrows: int = 6, max_length: int = 4, max_relations: int = 12) -> MonomialPresentation:
    """Finite-dimensional with minimal relations of lengths 2..max_length."""
    rng = random.Random(seed)
    while True:
        q = random_quiver(rng, max_arrows=max_arrows)
        rho = []
        for _ in range(rng.randint(1, 5)):
            r = random_walk(rng, q, rng.randint(2, max_length))
            if r is not None:
                rho.append(r)
        rho = make_finite(rng, q, rho, list(range(2, max_length + 1)), max_relations)
        if rho:
            return MonomialPresentation(q, rho, name=f"random{seed}")


def random_homogeneous(seed: int, d: int, max_arrows: int = 5, max_relations: int = 12) -> MonomialPresentation:
    """Finite-dimensional, every relation of length d, at most ``max_relations`` relations."""
    rng = random.Random(seed)
    while True:
        q = random_quiver(rng, max_arrows=max_arrows)
        rho = []
        for _ in range(rng.randint(1, 6)):
            r = random_walk(rng, q, d)
            if r is not None:
                rho.append(r)
        rho = make_finite(rng, q, rho, [d], max_relations)
        if rho:
            return MonomialPresentation(q, rho, name=f"hom{d}_{seed}")


def covering_closure(p: MonomialPresentation, d: int) -> MonomialPresentation:
    rho = list(p.rho)
    while True:
        cur = MonomialPresentation(p.quiver, rho, name=p.name)
        cov = is_d_covering(cur, d)
        if cov:
            return cur
        rho.append(cov.witness[2])


def random_covering(seed: int, d: int, max_arrows: int = 5, max_relations: int = 24) -> MonomialPresentation:
    """Finite-dimensional and d-covering; the global dimension may be finite.

    Closures that grow past ``max_relations`` are discarded and redrawn, since
    they tend to be the full set of length-d paths.
    """
    rng = random.Random(seed)
    while True:
        p = covering_closure(random_homogeneous(rng.getrandbits(32), d, max_arrows), d)
        if len(p.rho) <= max_relations:
            return p
