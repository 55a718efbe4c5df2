"""Exact vertical/horizontal visibility under the strong-visibility model.

Shapes are closed sets, lines-of-sight have zero width, and two shapes that
touch count as overlapping.  Horizontal visibility is vertical visibility of
the transposed drawing.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import kernels
from .geometry import Coord, Drawing, Family, GraphPair, Interval, as_coord, normalize_edges


class OverlapError(ValueError):
    def __init__(self, pairs):
        self.pairs = sorted(pairs)
        super().__init__(f"overlapping shapes: {self.pairs}")


class StructuralViolation(AssertionError):
    """A valid drawing failed a structural check that every valid drawing passes."""


@dataclass(frozen=True)
class Encoded:
    kind: np.ndarray
    l: np.ndarray
    r: np.ndarray
    b: np.ndarray
    t: np.ndarray
    scale: int

    def code(self, c: Coord) -> int:
        return c.base * self.scale + c.eps


def encode(d: Drawing, extra: Iterable[Coord] = ()) -> Encoded:
    """Map every Coord to ``base*M + eps`` with ``M`` large enough to keep order."""
    eps = [abs(c.eps) for s in d for c in (s.l, s.r, s.b, s.t)]
    eps += [abs(c.eps) for c in extra]
    scale = 2 * max(eps, default=0) + 1
    cols = [np.array([c.base * scale + c.eps for c in col], dtype=np.int64)
            for col in zip(*[(s.l, s.r, s.b, s.t) for s in d])] if d.n else [np.empty(0, np.int64)] * 4
    kind = np.array([kernels.ELL if s.kind is Family.LSHAPE else kernels.BOX for s in d], dtype=np.int64)
    return Encoded(kind, *cols, scale=scale)


def _edges(adj: np.ndarray) -> frozenset:
    us, vs = np.nonzero(np.triu(adj, 1))
    return frozenset((int(u) + 1, int(v) + 1) for u, v in zip(us, vs))


def find_overlaps(d: Drawing) -> list[tuple[int, int]]:
    e = encode(d)
    return sorted(_edges(kernels.overlaps(e.kind, e.l, e.r, e.b, e.t)))


def _visibility(d: Drawing, strict: bool):
    e = encode(d)
    if strict:
        bad = _edges(kernels.overlaps(e.kind, e.l, e.r, e.b, e.t))
        if bad:
            raise OverlapError(bad)
    av, ah = kernels.visibility_pair(e.l, e.r, e.b, e.t)
    return _edges(av), _edges(ah)


def vertical_visibility_graph(d: Drawing, strict: bool = True) -> frozenset:
    """Edges ``(u, v)`` with ``u < v`` realised by vertical lines-of-sight.

    With ``strict`` (default) an overlapping drawing raises
    :class:`OverlapError`; otherwise the result is advisory.
    """
    return _visibility(d, strict)[0]


def horizontal_visibility_graph(d: Drawing, strict: bool = True) -> frozenset:
    return _visibility(d, strict)[1]


@dataclass(frozen=True)
class VisibilityReport:
    vertical_edges: frozenset
    horizontal_edges: frozenset
    overlaps: tuple = ()
    missing_v: tuple = ()
    extra_v: tuple = ()
    missing_h: tuple = ()
    extra_h: tuple = ()

    @property
    def valid(self) -> bool:
        return not (self.overlaps or self.missing_v or self.extra_v or self.missing_h or self.extra_h)

    def to_json(self) -> dict:
        pairs = lambda es: [list(e) for e in es]  # noqa: E731
        return {
            "valid": self.valid,
            "overlaps": pairs(self.overlaps),
            "vertical": {"missing": pairs(self.missing_v), "extra": pairs(self.extra_v)},
            "horizontal": {"missing": pairs(self.missing_h), "extra": pairs(self.extra_h)},
        }


def validate_svr(d: Drawing, g: GraphPair) -> VisibilityReport:
    if d.n != g.n:
        raise ValueError(f"drawing has {d.n} shapes, graph pair has {g.n} vertices")
    e = encode(d)
    over = _edges(kernels.overlaps(e.kind, e.l, e.r, e.b, e.t))
    av, ah = kernels.visibility_pair(e.l, e.r, e.b, e.t)
    ev, eh = _edges(av), _edges(ah)
    return VisibilityReport(
        vertical_edges=ev,
        horizontal_edges=eh,
        overlaps=tuple(sorted(over)),
        missing_v=tuple(sorted(g.ev - ev)),
        extra_v=tuple(sorted(ev - g.ev)),
        missing_h=tuple(sorted(g.eh - eh)),
        extra_h=tuple(sorted(eh - g.eh)),
    )


# --------------------------------------------------------------------------
# structural diagnostics
# --------------------------------------------------------------------------

def _oriented(d: Drawing, axis: str) -> Drawing:
    if axis == "x":
        return d
    if axis == "y":
        return d.transpose()
    raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")


def check_thin_overlap(d: Drawing, s1, s2, x, axis: str = "x") -> tuple[int, ...]:
    """Vertices stabbed by the line at ``x`` between some ``u`` in s1 and ``v`` in s2.

    Returns the shortest such run along the line; consecutive entries share a
    line-of-sight.
    """
    d = _oriented(d, axis)
    x = as_coord(x)
    s1, s2 = set(s1), set(s2)
    for name, s in (("S1", s1), ("S2", s2)):
        if not any(x in d.x(v) for v in s):
            raise ValueError(f"{x} is outside the projection of {name}")
    stab = sorted((v for v in range(1, d.n + 1) if x in d.x(v)), key=lambda v: (d[v].b, v))
    best = None
    for i, u in enumerate(stab):
        if u not in s1:
            continue
        for j, v in enumerate(stab):
            if v in s2 and (best is None or abs(i - j) < abs(best[0] - best[1])):
                best = (i, j)
    i, j = best
    run = stab[min(i, j):max(i, j) + 1]
    return tuple(run if i <= j else reversed(run))


def components(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> list[list[int]]:
    """Connected components, each sorted, listed by smallest member."""
    vertices = sorted(set(vertices))
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in edges:
        if u in parent and v in parent:
            parent[find(u)] = find(v)
    groups: dict[int, list[int]] = {}
    for v in vertices:
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def projection_hull(d: Drawing, vs) -> Interval:
    it = iter(vs)
    hull = d.x(next(it))
    for v in it:
        hull = hull.hull(d.x(v))
    return hull


def check_nestedness(d: Drawing, edges, u: int, axis: str = "x") -> int:
    """Count components ``C`` of ``G - u`` with ``X(C)`` not inside ``X(u)``.

    Only the component of ``G`` containing ``u`` is considered, so the check
    also applies to a cut vertex of one component of a disconnected graph.
    Raises :class:`StructuralViolation` if the count exceeds two.
    """
    d = _oriented(d, axis)
    edges = normalize_edges(edges, d.n)
    home = next(c for c in components(range(1, d.n + 1), edges) if u in c)
    rest = [v for v in home if v != u]
    parts = components(rest, [e for e in edges if u not in e])
    if len(parts) < 2:
        raise ValueError(f"{u} is not a cut vertex")
    xu = d.x(u)
    count = sum(1 for part in parts if not all(d.x(v).issubset(xu) for v in part))
    if count > 2:
        raise StructuralViolation(f"cut vertex {u} leaves {count} components un-nested")
    return count


def check_no_twist(d: Drawing, edges, axis: str = "x") -> bool:
    """True iff the projections of distinct components are disjoint and ordered."""
    d = _oriented(d, axis)
    edges = normalize_edges(edges, d.n)
    hulls = sorted((projection_hull(d, c) for c in components(range(1, d.n + 1), edges)),
                   key=lambda h: (h.lo, h.hi))
    return all(a.hi < b.lo for a, b in zip(hulls, hulls[1:]))


def cycle_premise_witness(d: Drawing, axis: str = "x"):
    """Return ``(u, v, w)`` meeting the cycle premise on the given axis, or None."""
    d = _oriented(d, axis)
    if d.n < 3:
        return None
    e = encode(d)
    hit = kernels.cycle_premise(e.l, e.r, e.b)
    if len(hit) == 0:
        return None
    return tuple(int(i) + 1 for i in hit)


def is_cut_vertex(n: int, edges, u: int) -> bool:
    edges = normalize_edges(edges, n)
    home = next(c for c in components(range(1, n + 1), edges) if u in c)
    rest = [v for v in home if v != u]
    return len(components(rest, [e for e in edges if u not in e])) >= 2


@dataclass
class Diagnostics:
    nestedness: dict = field(default_factory=dict)
    no_twist: bool = True
    cycle_witness: object = None


def structural_checks(d: Drawing, g: GraphPair, scan_cycles: bool = False) -> Diagnostics:
    """Run the nestedness and no-twist checks on both axes of a valid drawing.

    With ``scan_cycles`` the cycle-premise scan runs as well; its premise can
    only appear when the corresponding graph has a cycle, so it is meant for
    forests.  Raises :class:`StructuralViolation` on any failure.
    """
    out = Diagnostics()
    for axis, edges in (("x", g.ev), ("y", g.eh)):
        for u in range(1, g.n + 1):
            if is_cut_vertex(g.n, edges, u):
                out.nestedness[(axis, u)] = check_nestedness(d, edges, u, axis)
        if not check_no_twist(d, edges, axis):
            raise StructuralViolation(f"components interleave along {axis}")
        if scan_cycles:
            w = cycle_premise_witness(d, axis)
            if w is not None:
                raise StructuralViolation(f"cycle premise on {axis}: {w}")
    return out
