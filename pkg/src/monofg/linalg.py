"""Exact Gaussian elimination over the rationals.

Vectors and matrix rows are sparse dicts ``{column: Fraction}``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable


def _clean(row: dict) -> dict:
    return {k: Fraction(v) for k, v in row.items() if v}


def row_reduce(rows: Iterable[dict], order=None) -> list:
    """Reduced row echelon form; returns (pivot_column, row) pairs."""
    pivots = []  # list of (col, row) with row[col] == 1
    key = (lambda c: order.index(c)) if order is not None else (lambda c: c)
    for r in rows:
        r = _clean(r)
        for col, prow in pivots:
            c = r.get(col)
            if c:
                for k, v in prow.items():
                    nv = r.get(k, 0) - c * v
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
        if not r:
            continue
        col = min(r, key=key)
        inv = 1 / r[col]
        r = {k: v * inv for k, v in r.items()}
        # keep earlier pivot rows reduced against the new pivot
        new = []
        for pc, prow in pivots:
            c = prow.get(col)
            if c:
                prow = dict(prow)
                for k, v in r.items():
                    nv = prow.get(k, 0) - c * v
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
            new.append((pc, prow))
        new.append((col, r))
        pivots = new
    return pivots


def rank(vectors: Iterable[dict]) -> int:
    return len(row_reduce(vectors))


def nullspace(rows: Iterable[dict], columns: list) -> list:
    """Basis of {x : row . x = 0 for every row}, as dicts over ``columns``."""
    pivots = row_reduce(rows, order=list(columns))
    pivot_cols = {c for c, _ in pivots}
    basis = []
    for free in columns:
        if free in pivot_cols:
            continue
        vec = {free: Fraction(1)}
        for c, r in pivots:
            v = r.get(free)
            if v:
                vec[c] = -v
        basis.append(vec)
    return basis
