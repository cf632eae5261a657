"""Quivers, paths and A-segmentation.

Paths compose left to right: ``compose(p, q)`` is "p then q" and requires
``target(p) == source(q)``.  A path stores its own vertex sequence, so it can
be composed, sliced and rotated without a reference to its quiver.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import EndpointMismatchError, NotClosedError, NotMultipleError, QuiverError


@dataclass(frozen=True)
class Arrow:
    id: str
    source: str
    target: str


@dataclass(frozen=True, order=False)
class Path:
    """A walk in a quiver.  ``vertices`` has ``len(arrows) + 1`` entries."""

    arrows: tuple
    vertices: tuple

    def __post_init__(self):
        if len(self.vertices) != len(self.arrows) + 1:
            raise QuiverError("a path needs exactly one more vertex than arrows")

    @classmethod
    def trivial(cls, vertex) -> "Path":
        return cls((), (vertex,))

    @property
    def base(self):
        return self.vertices[0]

    @property
    def source(self):
        return self.vertices[0]

    @property
    def target(self):
        return self.vertices[-1]

    def __len__(self):
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    @property
    def is_closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    def sub(self, start: int, stop: int) -> "Path":
        """Subpath made of arrows ``start..stop-1``."""
        if not 0 <= start <= stop <= len(self.arrows):
            raise IndexError(f"bad subpath bounds {start}:{stop}")
        return Path(self.arrows[start:stop], self.vertices[start : stop + 1])

    def prefix(self, n: int) -> "Path":
        return self.sub(0, n)

    def suffix(self, n: int) -> "Path":
        return self.sub(len(self) - n, len(self))

    def starts_with(self, other: "Path") -> bool:
        return self.source == other.source and self.arrows[: len(other)] == other.arrows

    def ends_with(self, other: "Path") -> bool:
        if self.target != other.target or len(other) > len(self):
            return False
        return len(other) == 0 or self.arrows[-len(other):] == other.arrows

    def occurrences(self, other: "Path") -> list:
        """Start positions where ``other`` occurs as a subpath."""
        n, m = len(self), len(other)
        if m == 0:
            return [i for i, v in enumerate(self.vertices) if v == other.base]
        return [i for i in range(n - m + 1) if self.arrows[i : i + m] == other.arrows]

    def contains(self, other: "Path") -> bool:
        return bool(self.occurrences(other))

    def key(self):
        """Canonical sort key: arrow ids first, base vertex breaks ties for trivial paths."""
        return (len(self.arrows), self.arrows, self.vertices[0])

    def __lt__(self, other):
        return self.key() < other.key()

    def __str__(self):
        if not self.arrows:
            return f"e_{self.base}"
        return " ".join(self.arrows)

    def __repr__(self):
        return f"Path({self})"


def compose(p: Path, q: Path) -> Path:
    if p.target != q.source:
        raise EndpointMismatchError(
            f"cannot compose {p} (ends at {p.target}) with {q} (starts at {q.source})"
        )
    return Path(p.arrows + q.arrows, p.vertices + q.vertices[1:])


def concat(paths: Iterable[Path]) -> Path:
    paths = list(paths)
    if not paths:
        raise ValueError("concat needs at least one path")
    out = paths[0]
    for p in paths[1:]:
        out = compose(out, p)
    return out


def power(p: Path, k: int) -> Path:
    if k == 0:
        return Path.trivial(p.source)
    return concat([p] * k)


class Quiver:
    """Finite quiver with string vertex and arrow ids."""

    def __init__(self, vertices: Sequence, arrows: Sequence):
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("duplicate vertex id")
        arrs = []
        for a in arrows:
            if not isinstance(a, Arrow):
                a = Arrow(*a)
            arrs.append(a)
        self.arrows = tuple(arrs)
        ids = [a.id for a in self.arrows]
        if len(set(ids)) != len(ids):
            raise QuiverError("duplicate arrow id")
        vset = set(self.vertices)
        for a in self.arrows:
            if a.source not in vset or a.target not in vset:
                raise QuiverError(f"arrow {a.id} has an endpoint outside the vertex set")
        self._by_id = {a.id: a for a in self.arrows}
        out = {v: [] for v in self.vertices}
        for a in sorted(self.arrows, key=lambda a: a.id):
            out[a.source].append(a)
        self._out = out

    def __eq__(self, other):
        if not isinstance(other, Quiver):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and set(self.arrows) == set(other.arrows)

    def __hash__(self):
        return hash((frozenset(self.vertices), frozenset(self.arrows)))

    def __repr__(self):
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    def arrow(self, arrow_id) -> Arrow:
        return self._by_id[arrow_id]

    def has_arrow(self, arrow_id) -> bool:
        return arrow_id in self._by_id

    def outgoing(self, vertex) -> list:
        return self._out[vertex]

    def sorted_vertices(self) -> list:
        return sorted(self.vertices)

    def trivial(self, vertex) -> Path:
        if vertex not in self._out:
            raise QuiverError(f"unknown vertex {vertex}")
        return Path.trivial(vertex)

    def arrow_path(self, arrow_id) -> Path:
        a = self._by_id[arrow_id]
        return Path((a.id,), (a.source, a.target))

    def path(self, arrow_ids) -> Path:
        """Build a path from arrow ids; a string is split on whitespace."""
        if isinstance(arrow_ids, str):
            arrow_ids = arrow_ids.split()
        arrow_ids = list(arrow_ids)
        if not arrow_ids:
            raise QuiverError("use trivial() for paths of length 0")
        verts = [self._by_id[arrow_ids[0]].source]
        for aid in arrow_ids:
            a = self._by_id[aid]
            if a.source != verts[-1]:
                raise EndpointMismatchError(f"arrow {aid} does not start at {verts[-1]}")
            verts.append(a.target)
        return Path(tuple(arrow_ids), tuple(verts))

    @cached_property
    def adjacency(self):
        idx = {v: i for i, v in enumerate(self.vertices)}
        n = len(self.vertices)
        mat = [[0] * n for _ in range(n)]
        for a in self.arrows:
            mat[idx[a.source]][idx[a.target]] += 1
        return mat


def enumerate_paths(q: Quiver, length: int) -> list:
    """All paths of the given length, sorted by arrow-id sequence."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    if length == 0:
        return [Path.trivial(v) for v in q.sorted_vertices()]
    out = []
    frontier = [q.arrow_path(a.id) for a in sorted(q.arrows, key=lambda a: a.id)]
    for _ in range(length - 1):
        frontier = [
            Path(p.arrows + (a.id,), p.vertices + (a.target,))
            for p in frontier
            for a in q.outgoing(p.target)
        ]
    out = sorted(frontier, key=lambda p: p.arrows)
    return out


@dataclass(frozen=True)
class APath:
    """A path cut into consecutive segments of length ``A``."""

    segments: tuple
    A: int = field(default=1)

    def __post_init__(self):
        if self.A < 1:
            raise ValueError("A must be positive")
        for s in self.segments:
            if len(s) != self.A:
                raise NotMultipleError(f"segment {s} does not have length {self.A}")
        for s, t in zip(self.segments, self.segments[1:]):
            if s.target != t.source:
                raise EndpointMismatchError(f"segments {s} and {t} are not composable")

    @property
    def length_a(self) -> int:
        return len(self.segments)

    def path(self) -> Path:
        return concat(self.segments)

    @property
    def is_closed(self) -> bool:
        return bool(self.segments) and self.segments[0].source == self.segments[-1].target

    def __str__(self):
        return "(" + ")(".join(str(s) for s in self.segments) + ")"


def a_segments(p: Path, A: int) -> APath:
    if A < 1 or len(p) == 0 or len(p) % A:
        raise NotMultipleError(f"length {len(p)} is not a positive multiple of {A}")
    return APath(tuple(p.sub(i, i + A) for i in range(0, len(p), A)), A)


def rotations(p):
    """Cyclic rotations of a closed path (arrow-wise) or of an APath (segment-wise)."""
    if isinstance(p, APath):
        if not p.is_closed:
            raise NotClosedError(f"{p} is not closed")
        segs = p.segments
        return [APath(segs[i:] + segs[:i], p.A) for i in range(len(segs))]
    if len(p) == 0 or not p.is_closed:
        raise NotClosedError(f"{p} is not a closed path of positive length")
    return [concat([p.sub(i, len(p)), p.sub(0, i)]) if i else p for i in range(len(p))]


def is_closed_trail(p: Path) -> bool:
    return len(p) > 0 and p.is_closed and len(set(p.arrows)) == len(p.arrows)


def is_closed_a_trail(p: APath) -> bool:
    if not p.segments or not p.is_closed:
        return False
    keys = [s.arrows for s in p.segments]
    return len(set(keys)) == len(keys)
