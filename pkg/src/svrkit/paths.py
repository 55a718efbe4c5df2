"""Simultaneous visibility representations of two paths.

Throughout, a pair of paths is a :class:`PathPair`: ``P_h = (1, ..., n)`` and
``P_v = pi``.  ``pos_v[v]`` is the place of ``v`` along ``P_v``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .geometry import (
    ONE_EPS, Coord, Drawing, Family, PathPair, lshape, path_edges, rect, shapes_disjoint, unit_square,
)
from .visibility import validate_svr

ORIENTATIONS = ("SW", "SE", "NW", "NE")


def _positions(pi: Sequence[int]) -> list[int]:
    pos = [0] * (len(pi) + 1)
    for i, v in enumerate(pi, start=1):
        pos[v] = i
    return pos


# --------------------------------------------------------------------------
# Algorithm A and the rectangle / unit-square decision
# --------------------------------------------------------------------------

def algorithm_a(p: PathPair, family=Family.USQ) -> Drawing:
    """Put the bottom-left corner of ``v`` at ``(pos_v(v), pos_h(v))``, sides 1+ε.

    The output may contain overlaps (exactly when the paths share an edge, for
    boxes); callers validate.
    """
    family = Family(family)
    pos = p.pos_v()
    make = {
        Family.USQ: lambda x, y: unit_square(x, y, ONE_EPS),
        Family.RECT: lambda x, y: rect(x, Coord(x) + ONE_EPS, y, Coord(y) + ONE_EPS),
        Family.LSHAPE: lambda x, y: lshape(x, y, ONE_EPS, ONE_EPS),
    }[family]
    return Drawing(tuple(make(pos[v], v) for v in range(1, p.n + 1)), family)


def shared_edges(p: PathPair) -> list[tuple[int, int]]:
    return sorted(path_edges(p.pi) & path_edges(range(1, p.n + 1)))


def decide_square_rect_svr(p: PathPair, family=Family.USQ) -> Optional[Drawing]:
    """A validated USSVR/RSVR of the two paths, or None if they share an edge."""
    family = Family(family)
    if family is Family.LSHAPE:
        raise ValueError("use decide_lsvr for L-shapes")
    if shared_edges(p):
        return None
    d = algorithm_a(p, family)
    report = validate_svr(d, p.graph_pair())
    if not report.valid:
        raise AssertionError(f"Algorithm A produced an invalid drawing: {report.to_json()}")
    return d


# --------------------------------------------------------------------------
# monotone prefixes and the stretchability condition
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class MonotoneProfile:
    """``S = (1..a)`` monotone in pi, and ``W = (pi_1..pi_c)`` monotone in value."""

    a: int
    s_increasing: bool
    c: int
    w_decreasing: bool

    @property
    def s_set(self) -> frozenset:
        return frozenset(range(1, self.a + 1))


def _run(seq: Sequence[int]) -> tuple[int, bool]:
    """Length of the longest strictly monotone prefix of ``seq`` and whether it increases."""
    if len(seq) < 2:
        return len(seq), True
    inc = seq[1] > seq[0]
    k = 2
    while k < len(seq) and (seq[k] > seq[k - 1]) == inc:
        k += 1
    return k, inc


def monotone_profile(pi: Sequence[int]) -> MonotoneProfile:
    pos = _positions(pi)
    a, s_inc = _run(pos[1:])
    c, w_inc = _run(pi)
    return MonotoneProfile(a=a, s_increasing=s_inc, c=c, w_decreasing=(not w_inc) and c >= 2)


def w_set(pi: Sequence[int], prof: MonotoneProfile) -> frozenset:
    return frozenset(pi[:prof.c])


@dataclass(frozen=True)
class ConditionReport:
    holds: bool
    violations: tuple = ()


def check_condition(pi: Sequence[int]) -> ConditionReport:
    """For every ``i+1`` immediately followed by ``i`` in pi: ``i in W`` or ``i+1 in S``."""
    prof = monotone_profile(pi)
    w = w_set(pi, prof)
    bad = tuple(pi[j + 1] for j in range(len(pi) - 1)
                if pi[j] == pi[j + 1] + 1 and pi[j + 1] not in w and pi[j] > prof.a)
    return ConditionReport(holds=not bad, violations=bad)


# --------------------------------------------------------------------------
# orientation variants
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class OrientationVariant:
    """``pi`` after re-orienting the paths; ``labeling[k-1]`` is the original vertex of ``k``."""

    tag: str
    pi: tuple
    labeling: tuple


def orientation_variants(p: PathPair) -> list[OrientationVariant]:
    """SW as given; reversing ``P_h`` complements values; reversing ``P_v`` reverses pi."""
    n = p.n
    ident = tuple(range(1, n + 1))
    comp = tuple(n + 1 - k for k in ident)
    pi_c = tuple(n + 1 - x for x in p.pi)
    return [
        OrientationVariant("SW", p.pi, ident),
        OrientationVariant("SE", pi_c, comp),
        OrientationVariant("NW", tuple(reversed(p.pi)), ident),
        OrientationVariant("NE", tuple(reversed(pi_c)), comp),
    ]


# --------------------------------------------------------------------------
# LsvrPaths
# --------------------------------------------------------------------------

def crossing_pairs_geometric(d: Drawing, subset) -> list[tuple[int, int]]:
    vs = sorted(subset)
    return [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:] if not shapes_disjoint(d[u], d[v])]


def crossing_pairs_combinatorial(pi: Sequence[int], subset) -> list[tuple[int, int]]:
    # In the SW drawing only i, i+1 can cross, and they do iff i+1 directly precedes i.
    pos = _positions(pi)
    return [(i, i + 1) for i in sorted(subset)
            if i + 1 in subset and pos[i] == pos[i + 1] + 1]


def _crossings(d: Drawing, pi, subset) -> bool:
    geo = crossing_pairs_geometric(d, subset)
    comb = crossing_pairs_combinatorial(pi, subset)
    if geo != comb:
        raise AssertionError(f"crossing detectors disagree on {subset}: {geo} vs {comb}")
    return bool(geo)


class ConditionError(ValueError):
    pass


@dataclass(frozen=True)
class LsvrTrace:
    drawing: Drawing
    corners: Drawing
    profile: MonotoneProfile
    stretched_left: tuple = ()
    stretched_down: tuple = ()


def lsvr_paths_trace(pi: Sequence[int]) -> LsvrTrace:
    pi = tuple(pi)
    report = check_condition(pi)
    if not report.holds:
        raise ConditionError(f"stretch condition fails at i = {list(report.violations)}")
    p = PathPair.from_permutation(pi)
    corners = algorithm_a(p, Family.LSHAPE)
    prof = monotone_profile(pi)
    w = w_set(pi, prof)
    shapes = list(corners.shapes)

    left = ()
    if prof.w_decreasing and _crossings(corners, pi, w):
        for i, v in enumerate(pi[:prof.c], start=1):
            s = shapes[v - 1]
            shapes[v - 1] = lshape(2 - i, s.b, s.r - Coord(2 - i), s.h)
        left = pi[:prof.c]

    down = ()
    if not prof.s_increasing and prof.a >= 2 and _crossings(corners, pi, prof.s_set):
        down = tuple(i for i in range(1, prof.a + 1) if i not in w)
        for i in down:
            s = shapes[i - 1]
            shapes[i - 1] = lshape(s.l, 2 - i, s.w, s.t - Coord(2 - i))

    return LsvrTrace(Drawing(tuple(shapes), Family.LSHAPE), corners, prof, left, down)


def lsvr_paths(pi: Sequence[int]) -> Drawing:
    """⌞-LSVR of ``P_v = pi``, ``P_h = (1..n)``; requires :func:`check_condition` to hold."""
    return lsvr_paths_trace(pi).drawing


# --------------------------------------------------------------------------
# decision
# --------------------------------------------------------------------------

@dataclass
class LsvrDecision:
    exists: bool
    orientation: str = "none"
    violations: dict = field(default_factory=dict)
    drawing: Optional[Drawing] = None
    variant: Optional[OrientationVariant] = None
    trace: Optional[LsvrTrace] = None


def lsvr_decision(p: PathPair) -> LsvrDecision:
    """Try SW, SE, NW, NE in order; report violations of every variant."""
    out = LsvrDecision(exists=False)
    for var in orientation_variants(p):
        rep = check_condition(var.pi)
        out.violations[var.tag] = list(rep.violations)
        if rep.holds and not out.exists:
            trace = lsvr_paths_trace(var.pi)
            # Variant vertex k is original vertex labeling[k-1]; the variant pair
            # is the same pair of undirected paths, so relabelling suffices.
            inv = [0] * (p.n + 1)
            for k, v in enumerate(var.labeling, start=1):
                inv[v] = k
            out.exists = True
            out.orientation = var.tag
            out.drawing = trace.drawing.relabel(inv[1:])
            out.variant = var
            out.trace = trace
    return out


def decide_lsvr(p: PathPair):
    """``(variant, drawing)`` for the first stretchable orientation, else None."""
    dec = lsvr_decision(p)
    if not dec.exists:
        return None
    return dec.variant, dec.drawing
