"""Exact coordinates, shapes and the graph-pair data model.

Every coordinate is a :class:`Coord` ``base + eps*ε`` where ε is a single
positive infinitesimal.  Comparison is lexicographic on ``(base, eps)``, so
all constructions that perturb by small multiples of ε stay exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True, order=True)
class Coord:
    base: int
    eps: int = 0

    def __add__(self, other):
        other = as_coord(other)
        return Coord(self.base + other.base, self.eps + other.eps)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_coord(other)
        return Coord(self.base - other.base, self.eps - other.eps)

    def __rsub__(self, other):
        return as_coord(other) - self

    def __neg__(self):
        return Coord(-self.base, -self.eps)

    def __mul__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        return Coord(self.base * k, self.eps * k)

    __rmul__ = __mul__

    def __repr__(self):
        if self.eps == 0:
            return f"Coord({self.base})"
        return f"Coord({self.base}{self.eps:+d}ε)"

    def to_list(self) -> list[int]:
        return [self.base, self.eps]


ZERO = Coord(0, 0)
ONE = Coord(1, 0)
ONE_EPS = Coord(1, 1)  # side length 1+ε used by Algorithm A


def as_coord(value) -> Coord:
    if isinstance(value, Coord):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Coord(value, 0)
    if isinstance(value, (tuple, list)) and len(value) == 2:
        return Coord(int(value[0]), int(value[1]))
    raise TypeError(f"cannot interpret {value!r} as a Coord")


@dataclass(frozen=True)
class Interval:
    """Closed interval ``[lo, hi]``."""

    lo: Coord
    hi: Coord

    def __post_init__(self):
        if self.hi < self.lo:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    def __contains__(self, x) -> bool:
        x = as_coord(x)
        return self.lo <= x <= self.hi

    def overlaps(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def issubset(self, other: "Interval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))


class Family(str, Enum):
    RECT = "rect"
    USQ = "usq"
    LSHAPE = "lshape"


@dataclass(frozen=True)
class Shape:
    """A rectangle, unit square or ⌞-shaped L.

    All kinds are stored by their bounding box.  For an L-shape the corner is
    ``(l, b)``; its horizontal bar is ``[l, r] x {b}`` and its vertical bar
    ``{l} x [b, t]``.
    """

    kind: Family
    l: Coord
    r: Coord
    b: Coord
    t: Coord

    def __post_init__(self):
        object.__setattr__(self, "kind", Family(self.kind))
        for name in "lrbt":
            object.__setattr__(self, name, as_coord(getattr(self, name)))
        if not (self.l < self.r and self.b < self.t):
            raise ValueError(f"degenerate {self.kind.value} {self.l}..{self.r} x {self.b}..{self.t}")
        if self.kind is Family.USQ and self.r - self.l != self.t - self.b:
            raise ValueError("unit square must have equal sides")

    @property
    def w(self) -> Coord:
        return self.r - self.l

    @property
    def h(self) -> Coord:
        return self.t - self.b

    @property
    def corner(self) -> tuple[Coord, Coord]:
        return (self.l, self.b)

    def boxes(self) -> list[tuple[Coord, Coord, Coord, Coord]]:
        """Closed axis-aligned boxes ``(l, r, b, t)`` whose union is the shape."""
        if self.kind is Family.LSHAPE:
            return [(self.l, self.r, self.b, self.b), (self.l, self.l, self.b, self.t)]
        return [(self.l, self.r, self.b, self.t)]

    def translate(self, dx, dy) -> "Shape":
        dx, dy = as_coord(dx), as_coord(dy)
        return Shape(self.kind, self.l + dx, self.r + dx, self.b + dy, self.t + dy)

    def transpose(self) -> "Shape":
        # An ⌞ stays an ⌞ under the swap x <-> y.
        return Shape(self.kind, self.b, self.t, self.l, self.r)

    def coords(self) -> dict[str, Coord]:
        if self.kind is Family.LSHAPE:
            return {"l": self.l, "b": self.b, "w": self.w, "h": self.h}
        return {"l": self.l, "r": self.r, "b": self.b, "t": self.t}


def rect(l, r, b, t) -> Shape:
    return Shape(Family.RECT, l, r, b, t)


def unit_square(l, b, side=ONE_EPS) -> Shape:
    l, b, side = as_coord(l), as_coord(b), as_coord(side)
    return Shape(Family.USQ, l, l + side, b, b + side)


def lshape(l, b, w=ONE_EPS, h=ONE_EPS) -> Shape:
    l, b = as_coord(l), as_coord(b)
    w, h = as_coord(w), as_coord(h)
    if w <= ZERO or h <= ZERO:
        raise ValueError("L-shape bars need positive length")
    return Shape(Family.LSHAPE, l, l + w, b, b + h)


def x_projection(shape: Shape) -> Interval:
    return Interval(shape.l, shape.r)


def y_projection(shape: Shape) -> Interval:
    return Interval(shape.b, shape.t)


def _boxes_meet(p, q) -> bool:
    return p[0] <= q[1] and q[0] <= p[1] and p[2] <= q[3] and q[2] <= p[3]


def shapes_disjoint(a: Shape, b: Shape) -> bool:
    """True iff the closed point sets of ``a`` and ``b`` do not meet."""
    return not any(_boxes_meet(p, q) for p in a.boxes() for q in b.boxes())


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def normalize_edges(edges: Iterable[Sequence[int]], n: int) -> frozenset:
    out = set()
    for e in edges:
        u, v = (int(x) for x in e)
        if u == v:
            raise ValueError(f"self-loop at {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge {u}-{v} outside 1..{n}")
        out.add(_edge(u, v))
    return frozenset(out)


@dataclass(frozen=True)
class GraphPair:
    """Two graphs ``G_v`` (vertical) and ``G_h`` (horizontal) on vertices 1..n."""

    n: int
    ev: frozenset = field(default_factory=frozenset)
    eh: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        object.__setattr__(self, "ev", normalize_edges(self.ev, self.n))
        object.__setattr__(self, "eh", normalize_edges(self.eh, self.n))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.ev) + sum(v in e for e in self.eh)


def path_edges(seq: Sequence[int]) -> frozenset:
    return frozenset(_edge(seq[i], seq[i + 1]) for i in range(len(seq) - 1))


@dataclass(frozen=True)
class PathPair:
    """Two paths on [n], relabelled so that ``P_h = (1, ..., n)``.

    ``pi`` is ``P_v`` in the internal labels; ``labels[i-1]`` is the original
    name of internal vertex ``i``.
    """

    n: int
    pi: tuple
    labels: tuple = ()

    def __post_init__(self):
        pi = tuple(int(x) for x in self.pi)
        object.__setattr__(self, "pi", pi)
        if sorted(pi) != list(range(1, self.n + 1)):
            raise ValueError(f"{pi} is not a permutation of 1..{self.n}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(1, self.n + 1)))
        elif len(self.labels) != self.n:
            raise ValueError("labels must name every vertex")

    @classmethod
    def from_permutation(cls, pi: Sequence[int]) -> "PathPair":
        return cls(len(pi), tuple(pi))

    def pos_v(self) -> list[int]:
        """``pos[v]`` = 1-based place of ``v`` along ``P_v`` (index 0 unused)."""
        pos = [0] * (self.n + 1)
        for i, v in enumerate(self.pi, start=1):
            pos[v] = i
        return pos

    def graph_pair(self) -> GraphPair:
        return GraphPair(self.n, path_edges(self.pi), path_edges(range(1, self.n + 1)))

    def label(self, v: int):
        return self.labels[v - 1]


def normalize_path_pair(seq_v: Sequence, seq_h: Sequence) -> PathPair:
    """Relabel so ``seq_h`` becomes ``(1..n)``; returns ``P_v`` as a permutation."""
    seq_v, seq_h = list(seq_v), list(seq_h)
    for name, seq in (("P_v", seq_v), ("P_h", seq_h)):
        if len(set(seq)) != len(seq):
            raise ValueError(f"{name} repeats a vertex")
    if set(seq_v) != set(seq_h):
        raise ValueError("paths are not over the same vertex set")
    index = {v: i for i, v in enumerate(seq_h, start=1)}
    return PathPair(len(seq_h), tuple(index[v] for v in seq_v), tuple(seq_h))


@dataclass(frozen=True)
class Drawing:
    """One shape per vertex 1..n; ``shapes[v-1]`` is the shape of ``v``."""

    shapes: tuple
    family: Family

    def __post_init__(self):
        object.__setattr__(self, "shapes", tuple(self.shapes))
        object.__setattr__(self, "family", Family(self.family))
        for v, s in enumerate(self.shapes, start=1):
            if s.kind is not self.family:
                raise ValueError(f"vertex {v} is a {s.kind.value}, drawing family is {self.family.value}")
        if self.family is Family.USQ and self.shapes:
            side = self.shapes[0].w
            if any(s.w != side for s in self.shapes):
                raise ValueError("unit squares must all have the same side")

    @property
    def n(self) -> int:
        return len(self.shapes)

    def __len__(self):
        return len(self.shapes)

    def __getitem__(self, v: int) -> Shape:
        if not 1 <= v <= len(self.shapes):
            raise KeyError(v)
        return self.shapes[v - 1]

    def __iter__(self) -> Iterator[Shape]:
        return iter(self.shapes)

    def transpose(self) -> "Drawing":
        return Drawing(tuple(s.transpose() for s in self.shapes), self.family)

    def x(self, v: int) -> Interval:
        return x_projection(self[v])

    def y(self, v: int) -> Interval:
        return y_projection(self[v])

    def relabel(self, perm: Sequence[int]) -> "Drawing":
        """New drawing whose vertex ``v`` gets this drawing's shape ``perm[v-1]``."""
        return Drawing(tuple(self[p] for p in perm), self.family)
