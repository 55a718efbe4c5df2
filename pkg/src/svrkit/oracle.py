"""Brute-force ground truth: exhaustive SAT/NAE solving and SVR search.

The geometric search places one shape per vertex on a finite lattice and
backtracks.  For rectangles and L-shapes the lattice is canonical: on each
axis the ``2n`` endpoint values are a permutation of ``1..2n``.  Unit squares
use corners on a ``1/(n+1)`` grid, scaled to integers with side ``n+1``.
"""
from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import kernels
from .dimacs import Cnf3Instance, NaeInstance
from .geometry import Coord, Drawing, Family, GraphPair, PathPair, lshape, rect, unit_square
from .paths import lsvr_decision
from .reductions import nae_violations, sat_violations
from .visibility import validate_svr

MAX_SAT_VARS = 24
MAX_SEARCH_N = 5

FOUND = "found"
EXHAUSTED = "exhausted"
CAPPED = "capped"
_STATUS = {kernels.FOUND: FOUND, kernels.EXHAUSTED: EXHAUSTED, kernels.CAPPED: CAPPED}


@dataclass(frozen=True)
class SearchBudget:
    """Limits for :func:`brute_force_svr`.

    ``coord_range`` overrides the lattice extent: the largest endpoint value
    for rectangles and L-shapes (default ``2n``), or the largest corner offset
    from the first shape in scaled units for unit squares (default
    ``n*(n+1)``).  A smaller range makes "exhausted" a statement about that
    range only.
    """

    coord_range: Optional[int] = None
    max_nodes: int = 10 ** 9
    time_limit: Optional[float] = None

    def __post_init__(self):
        if self.coord_range is not None and self.coord_range <= 0:
            raise ValueError("coord_range must be positive")
        if self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")


@dataclass
class OracleResult:
    status: str
    drawing: Optional[Drawing] = None
    nodes: int = 0
    seconds: float = 0.0
    order: tuple = ()

    @property
    def found(self) -> bool:
        return self.status == FOUND


# --------------------------------------------------------------------------
# boolean side
# --------------------------------------------------------------------------

def _first_model(n_vars, bad):
    if n_vars > MAX_SAT_VARS:
        raise ValueError(f"{n_vars} variables exceeds the brute-force cap of {MAX_SAT_VARS}")
    for bits in itertools.product((False, True), repeat=n_vars):
        alpha = {v + 1: b for v, b in enumerate(bits)}
        if not bad(alpha):
            return alpha
    return None


def brute_force_nae(f: NaeInstance) -> Optional[dict[int, bool]]:
    """First NAE-satisfying assignment in lexicographic order (F before T, v1 first)."""
    return _first_model(f.n_vars, lambda a: nae_violations(f, a))


def brute_force_sat(f: Cnf3Instance) -> Optional[dict[int, bool]]:
    return _first_model(f.n_vars, lambda a: sat_violations(f, a))


# --------------------------------------------------------------------------
# geometric search
# --------------------------------------------------------------------------

def placement_order(g: GraphPair) -> tuple[int, ...]:
    """Highest degree first, then greedily the vertex with most placed neighbours."""
    adj = {v: set() for v in g.vertices}
    for u, v in itertools.chain(g.ev, g.eh):
        adj[u].add(v)
        adj[v].add(u)
    deg = {v: len(adj[v]) for v in adj}
    order, left = [], set(adj)
    while left:
        placed = set(order)
        v = min(left, key=lambda u: (-len(adj[u] & placed), -deg[u], u))
        order.append(v)
        left.remove(v)
    return tuple(order)


def _rect_candidates(top: int, mirror: bool):
    pairs = [(a, b) for a in range(1, top + 1) for b in range(a + 1, top + 1)]
    rows = [(l, r, b, t) for l, r in pairs for b, t in pairs]
    if mirror:
        root = [row for row in rows if row[0] + row[1] <= top + 1 and row[2] + row[3] <= top + 1]
    else:
        root = rows
    return root, rows


def _usq_candidates(n: int, span: int, side: int):
    # Offsets are shifted by ``span`` so every value is non-negative.
    rows = [(x, x + side, y, y + side) for x in range(2 * span + 1) for y in range(2 * span + 1)]
    root = [(span, span + side, span, span + side)]
    quadrant = [row for row in rows if row[0] >= span and row[2] >= span]
    return root, quadrant, rows


def _levels(family: Family, n: int, budget: SearchBudget):
    if family is Family.USQ:
        side = n + 1
        span = budget.coord_range or n * (n + 1)
        root, quadrant, rows = _usq_candidates(n, span, side)
        blocks = [root, quadrant] + [rows] * (n - 2) if n >= 2 else [root]
        return blocks, False, 2 * span + side + 1, side
    top = budget.coord_range or 2 * n
    root, rows = _rect_candidates(top, mirror=family is Family.RECT)
    return [root] + [rows] * (n - 1), True, top + 1, None


def _pack(blocks):
    """Stack per-level candidate lists; identical lists share storage."""
    uniq, index = [], []
    for blk in blocks:
        for k, u in enumerate(uniq):
            if u is blk:
                index.append(k)
                break
        else:
            index.append(len(uniq))
            uniq.append(blk)
    offsets = np.cumsum([0] + [len(u) for u in uniq])
    cand = np.array([row for u in uniq for row in u], dtype=np.int64).reshape(-1, 4)
    start = np.array([offsets[k] for k in index], dtype=np.int64)
    end = np.array([offsets[k + 1] for k in index], dtype=np.int64)
    return cand, start, end


def _chunk_run(args):
    kind, req_v, req_h, cand, start, end, distinct, max_val, cap = args
    status, nodes, out = kernels.search_loop(kind, req_v, req_h, cand, start, end, distinct, max_val, cap)
    return int(status), int(nodes), np.asarray(out)


def _to_drawing(family: Family, out, order, side) -> Drawing:
    shapes = [None] * len(order)
    for k, v in enumerate(order):
        l, r, b, t = (int(x) for x in out[k])
        if family is Family.LSHAPE:
            shapes[v - 1] = lshape(Coord(l), Coord(b), Coord(r - l), Coord(t - b))
        elif family is Family.USQ:
            shapes[v - 1] = unit_square(Coord(l), Coord(b), side=Coord(side))
        else:
            shapes[v - 1] = rect(Coord(l), Coord(r), Coord(b), Coord(t))
    return Drawing(tuple(shapes), family)


def brute_force_svr(g: GraphPair, family, budget: SearchBudget = SearchBudget(),
                    workers: int = 1, chunks: int = 64) -> OracleResult:
    """Exhaustive lattice search for an SVR of ``g`` with shapes from ``family``.

    The branching level (the first with more than one candidate) is split
    into ``chunks`` slices that run in order; the time limit is checked
    between slices.  With ``workers > 1`` slices run in a process pool, each
    with the full node cap, and the lowest-index success wins.
    """
    family = Family(family)
    n = g.n
    if n > MAX_SEARCH_N:
        raise ValueError(f"exhaustive search supports n <= {MAX_SEARCH_N}, got {n}")
    t0 = time.perf_counter()
    if n == 0:
        return OracleResult(FOUND, Drawing((), family), 0, 0.0, ())
    order = placement_order(g)
    where = {v: k for k, v in enumerate(order)}
    req_v = np.zeros((n, n), np.bool_)
    req_h = np.zeros((n, n), np.bool_)
    for edges, mat in ((g.ev, req_v), (g.eh, req_h)):
        for u, v in edges:
            mat[where[u], where[v]] = mat[where[v], where[u]] = True
    blocks, distinct, max_val, side = _levels(family, n, budget)
    cand, start, end = _pack(blocks)
    kind = kernels.ELL if family is Family.LSHAPE else kernels.BOX

    split = next((k for k in range(n) if end[k] - start[k] > 1), 0)
    lo, hi = int(start[split]), int(end[split])
    step = max(1, -(-(hi - lo) // chunks))
    slices = []
    for a in range(lo, hi, step):
        s, e = start.copy(), end.copy()
        s[split], e[split] = a, min(a + step, hi)
        slices.append((s, e))

    def args(s, e, cap):
        return (kind, req_v, req_h, cand, s, e, distinct, max_val, cap)

    nodes = 0
    if workers <= 1:
        for s, e in slices:
            if budget.time_limit is not None and time.perf_counter() - t0 > budget.time_limit:
                return OracleResult(CAPPED, None, nodes, time.perf_counter() - t0, order)
            status, used, out = _chunk_run(args(s, e, budget.max_nodes - nodes))
            nodes += used
            if status != kernels.EXHAUSTED:
                break
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_chunk_run, [args(s, e, budget.max_nodes) for s, e in slices]))
        nodes = sum(r[1] for r in results)
        status, out = kernels.EXHAUSTED, None
        for st, _, o in results:
            if st != kernels.EXHAUSTED:
                status, out = st, o
                break
    seconds = time.perf_counter() - t0
    if budget.time_limit is not None and seconds > budget.time_limit and status == kernels.EXHAUSTED:
        status = kernels.CAPPED
    if status != kernels.FOUND:
        return OracleResult(_STATUS[status], None, nodes, seconds, order)
    d = _to_drawing(family, out, order, side)
    report = validate_svr(d, g)
    if not report.valid:
        raise AssertionError(f"oracle returned an invalid drawing: {report.to_json()}")
    return OracleResult(FOUND, d, nodes, seconds, order)


# --------------------------------------------------------------------------
# cross-check of the path decision
# --------------------------------------------------------------------------

@dataclass
class CheckReport:
    n_max: int
    counts: dict = field(default_factory=dict)
    entries: list = field(default_factory=list)

    @property
    def discrepancies(self) -> list:
        return [e for e in self.entries if e["status"] == "disagree"]

    @property
    def capped(self) -> list:
        return [e for e in self.entries if e["status"] == "capped"]

    def to_json(self) -> dict:
        return {"n_max": self.n_max, "counts": {str(k): v for k, v in sorted(self.counts.items())},
                "entries": self.entries}


def exhaustive_lsvr_check(n_max: int, completeness_max: int = 4,
                          budget: SearchBudget = SearchBudget()) -> CheckReport:
    """Compare the path decision with validation and, for small n, the oracle.

    Every accepted instance must validate within the grid ``[2-n, n+1]``.
    For ``n <= completeness_max`` the oracle also runs on every instance: it
    must find a drawing for accepted pairs and exhaust for rejected ones.
    """
    if n_max > 8:
        raise ValueError("soundness sweep is limited to n <= 8")
    if completeness_max > 4:
        raise ValueError("completeness check is limited to n <= 4")
    rep = CheckReport(n_max)
    for n in range(1, n_max + 1):
        c = {"accepted": 0, "rejected": 0, "agree": 0, "disagree": 0, "capped": 0}
        for pi in itertools.permutations(range(1, n + 1)):
            p = PathPair.from_permutation(pi)
            t0 = time.perf_counter()
            dec = lsvr_decision(p)
            ok = True
            if dec.exists:
                c["accepted"] += 1
                ok = validate_svr(dec.drawing, p.graph_pair()).valid and all(
                    2 - n <= x.base <= n + 1 for s in dec.drawing for x in (s.l, s.r, s.b, s.t))
            else:
                c["rejected"] += 1
            entry = {"perm": list(pi), "decision": "accept" if dec.exists else "reject",
                     "oracle": "skipped", "nodes": 0}
            status = "agree" if ok else "disagree"
            if n <= completeness_max:
                res = brute_force_svr(p.graph_pair(), Family.LSHAPE, budget)
                entry["oracle"] = res.status
                entry["nodes"] = res.nodes
                if res.status == CAPPED:
                    status = "capped"
                elif (res.status == FOUND) != dec.exists:
                    status = "disagree"
            entry["status"] = status
            entry["seconds"] = round(time.perf_counter() - t0, 6)
            c[status] += 1
            rep.entries.append(entry)
        rep.counts[n] = c
    return rep
