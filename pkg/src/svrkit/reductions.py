"""Hardness gadgets: formulas to graph pairs, assignments to drawings and back.

Two reductions are provided:

* Monotone NAE-3SAT to unit-square SVRs.  Each clause is a claw ``K_{1,3}``
  in ``G_v`` (clause vertex in the centre); ``G_h`` is the path of clause
  vertices plus, per variable, the path of its occurrences.
* 3SAT to rectangle SVRs.  Each clause is a 1-subdivided claw in ``G_v``:
  clause vertex, one vertex per literal occurrence, and below each one a leaf
  that is an occurrence of the opposite literal.  ``G_h`` is the clause path
  plus, per variable ``v``, a path through all occurrences of ``v`` and a path
  through all occurrences of ``-v``.

Gadget paths follow the order of appearance (clause index, then slot).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import permutations
from typing import Mapping

from .dimacs import Cnf3Instance, NaeInstance
from .geometry import ONE, Coord, Drawing, Family, GraphPair, rect, unit_square
from .visibility import validate_svr

NAE_MODE = "nae-ussvr"
SAT_MODE = "3sat-rsvr"


class ReductionError(ValueError):
    pass


@dataclass(frozen=True)
class Role:
    kind: str  # "clause" | "lit" | "neg"
    clause: int  # 0-based
    slot: int = -1
    literal: int = 0  # the literal this vertex is an occurrence of

    def to_json(self):
        return {"kind": self.kind, "clause": self.clause, "slot": self.slot, "literal": self.literal}


@dataclass(frozen=True)
class GadgetIndex:
    mode: str
    n_vars: int
    clauses: tuple
    pair: GraphPair
    roles: tuple  # roles[v-1]
    clause_gadget: tuple
    sat_gadgets: tuple
    var_gadgets: Mapping = field(default_factory=dict)
    neg_gadgets: Mapping = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "n_vars": self.n_vars,
            "clauses": [list(c) for c in self.clauses],
            "pair": {"n": self.pair.n, "ev": sorted(map(list, self.pair.ev)), "eh": sorted(map(list, self.pair.eh))},
            "roles": [r.to_json() for r in self.roles],
            "gadgets": {
                "clauses": list(self.clause_gadget),
                "satisfiability": [list(g) for g in self.sat_gadgets],
                "variables": {str(k): list(v) for k, v in sorted(self.var_gadgets.items())},
                "negated": {str(k): list(v) for k, v in sorted(self.neg_gadgets.items())},
            },
        }

    @classmethod
    def from_json(cls, obj) -> "GadgetIndex":
        if isinstance(obj, str):
            obj = json.loads(obj)
        g = obj["gadgets"]
        p = obj["pair"]
        return cls(
            mode=obj["mode"],
            n_vars=obj["n_vars"],
            clauses=tuple(tuple(c) for c in obj["clauses"]),
            pair=GraphPair(p["n"], p["ev"], p["eh"]),
            roles=tuple(Role(r["kind"], r["clause"], r["slot"], r["literal"]) for r in obj["roles"]),
            clause_gadget=tuple(g["clauses"]),
            sat_gadgets=tuple(tuple(x) for x in g["satisfiability"]),
            var_gadgets={int(k): tuple(v) for k, v in g["variables"].items()},
            neg_gadgets={int(k): tuple(v) for k, v in g["negated"].items()},
        )


def _path(seq):
    return [(seq[i], seq[i + 1]) for i in range(len(seq) - 1)]


# --------------------------------------------------------------------------
# assignments
# --------------------------------------------------------------------------

def assignment_from_bits(bits: str, n_vars: int) -> dict[int, bool]:
    """``"0101"`` -> v1=F, v2=T, v3=F, v4=T."""
    bits = bits.strip()
    if len(bits) != n_vars or set(bits) - {"0", "1"}:
        raise ValueError(f"expected {n_vars} bits of 0/1, got {bits!r}")
    return {i + 1: b == "1" for i, b in enumerate(bits)}


def assignment_bits(alpha: Mapping[int, bool], n_vars: int) -> str:
    return "".join("1" if alpha.get(v, False) else "0" for v in range(1, n_vars + 1))


def _lit_value(lit: int, alpha) -> bool:
    return alpha[abs(lit)] if lit > 0 else not alpha[abs(lit)]


def nae_violations(f: NaeInstance, alpha) -> list[int]:
    return [i for i, c in enumerate(f.clauses) if len({alpha[v] for v in c}) != 2]


def sat_violations(f: Cnf3Instance, alpha) -> list[int]:
    return [i for i, c in enumerate(f.clauses) if not any(_lit_value(x, alpha) for x in c)]


# --------------------------------------------------------------------------
# NAE-3SAT -> unit squares
# --------------------------------------------------------------------------

def build_ussvr_instance(f: NaeInstance) -> tuple[GraphPair, GadgetIndex]:
    roles, ev, clause_vs, sats = [], [], [], []
    occ: dict[int, list[int]] = {}
    for i, c in enumerate(f.clauses):
        cv = 4 * i + 1
        roles.append(Role("clause", i))
        clause_vs.append(cv)
        members = [cv]
        for k, var in enumerate(c):
            lv = cv + 1 + k
            roles.append(Role("lit", i, k, var))
            ev.append((cv, lv))
            occ.setdefault(var, []).append(lv)
            members.append(lv)
        sats.append(tuple(members))
    eh = _path(clause_vs)
    for var in sorted(occ):
        eh += _path(occ[var])
    pair = GraphPair(len(roles), ev, eh)
    idx = GadgetIndex(NAE_MODE, f.n_vars, f.clauses, pair, tuple(roles), tuple(clause_vs), tuple(sats),
                      {k: tuple(v) for k, v in sorted(occ.items())}, {})
    return pair, idx


def _rho(variables, alpha) -> tuple[dict[int, int], int]:
    false = [v for v in variables if not alpha[v]]
    true = [v for v in variables if alpha[v]]
    rho = {v: k for k, v in enumerate(false)}
    rho.update({v: len(false) + 1 + k for k, v in enumerate(true)})
    return rho, len(false)


def build_ussvr_drawing(f: NaeInstance, alpha: Mapping[int, bool]) -> Drawing:
    """Unit squares of side 1 realising the NAE instance under ``alpha``."""
    bad = nae_violations(f, alpha)
    if bad:
        i = bad[0]
        raise ReductionError(f"clause {i + 1} = {f.clauses[i]} is not NAE-satisfied")
    rho, rho_c = _rho(f.variables(), alpha)
    corners: dict[int, tuple[Coord, Coord]] = {}
    for i, c in enumerate(f.clauses):
        cv = 4 * i + 1
        vals = [alpha[v] for v in c]
        minority = next(k for k in range(3) if vals.count(vals[k]) == 1)
        left, right = [k for k in range(3) if k != minority]
        corners[cv] = (Coord(3 * i + 1), Coord(2 * rho_c))
        xs = {minority: Coord(3 * i + 1), left: Coord(3 * i, 1), right: Coord(3 * i + 2, -1)}
        for k, var in enumerate(c):
            corners[cv + 1 + k] = (xs[k], Coord(2 * rho[var]))
    n = 4 * len(f.clauses)
    return Drawing(tuple(unit_square(*corners[v], side=ONE) for v in range(1, n + 1)), Family.USQ)


def _require_valid(d: Drawing, idx: GadgetIndex):
    rep = validate_svr(d, idx.pair)
    if not rep.valid:
        raise ReductionError(f"drawing is not a valid SVR of the constructed pair: {rep.to_json()}")


def _y_hull(d: Drawing, vs):
    return min(d[v].b for v in vs), max(d[v].t for v in vs)


def _below(a, b) -> bool:
    """Hull ``a`` lies entirely below hull ``b``."""
    return a[1] <= b[0]


def decode_ussvr_assignment(d: Drawing, idx: GadgetIndex) -> dict[int, bool]:
    """T iff the variable's gadget lies above the clause gadget."""
    if idx.mode != NAE_MODE:
        raise ReductionError(f"gadget index is for {idx.mode}")
    _require_valid(d, idx)
    alpha = {v: False for v in range(1, idx.n_vars + 1)}
    if not idx.clause_gadget:
        return alpha
    yc = _y_hull(d, idx.clause_gadget)
    for var, vs in idx.var_gadgets.items():
        yv = _y_hull(d, vs)
        if _below(yc, yv):
            alpha[var] = True
        elif not _below(yv, yc):
            raise ReductionError(f"gadget of v{var} interleaves the clause gadget")
    return alpha


# --------------------------------------------------------------------------
# 3SAT -> rectangles
# --------------------------------------------------------------------------

def build_rsvr_instance(f: Cnf3Instance) -> tuple[GraphPair, GadgetIndex]:
    roles, ev, clause_vs, sats = [], [], [], []
    pos: dict[int, list[int]] = {}
    neg: dict[int, list[int]] = {}
    for i, c in enumerate(f.clauses):
        cv = 7 * i + 1
        roles.append(Role("clause", i))
        clause_vs.append(cv)
        members = [cv]
        for k, lit in enumerate(c):
            lv, nv = cv + 1 + 2 * k, cv + 2 + 2 * k
            roles.append(Role("lit", i, k, lit))
            roles.append(Role("neg", i, k, -lit))
            ev += [(cv, lv), (lv, nv)]
            members += [lv, nv]
            for vertex, l_ in ((lv, lit), (nv, -lit)):
                (pos if l_ > 0 else neg).setdefault(abs(l_), []).append(vertex)
        sats.append(tuple(members))
    eh = _path(clause_vs)
    for gad in (pos, neg):
        for var in sorted(gad):
            eh += _path(gad[var])
    pair = GraphPair(len(roles), ev, eh)
    idx = GadgetIndex(SAT_MODE, f.n_vars, f.clauses, pair, tuple(roles), tuple(clause_vs), tuple(sats),
                      {k: tuple(v) for k, v in sorted(pos.items())},
                      {k: tuple(v) for k, v in sorted(neg.items())})
    return pair, idx


def _arrangement(clause, alpha):
    """Pick ``(left, middle, right)`` slots with a satisfied literal in the middle.

    Slots of the same variable feed the same horizontal gadgets, so their
    left-to-right order has to follow slot order.  The middle slot is tried
    first so that the natural order is kept whenever possible.
    """
    sat = [k for k in range(3) if _lit_value(clause[k], alpha)]
    for mid in sorted(sat, key=lambda k: (k != 1, k)):
        rest = [k for k in range(3) if k != mid]
        for left, right in (rest, rest[::-1]):
            rank = {left: 0, mid: 1, right: 2}
            if all(rank[a] < rank[b] for a in range(3) for b in range(a + 1, 3)
                   if abs(clause[a]) == abs(clause[b])):
                return left, mid, right
    return None


def build_rsvr_drawing(f: Cnf3Instance, alpha: Mapping[int, bool]) -> Drawing:
    """Rectangles realising the 3SAT instance under a satisfying ``alpha``."""
    bad = sat_violations(f, alpha)
    if bad:
        i = bad[0]
        raise ReductionError(f"clause {i + 1} = {f.clauses[i]} is falsified")
    boxes: dict[int, tuple] = {}

    def y_of(lit):
        j = abs(lit)
        lower = (lit > 0) == alpha[j]
        base = 4 * j if lower else 4 * j + 2
        return Coord(base), Coord(base + 1)

    hulls = []
    for i, c in enumerate(f.clauses):
        arr = _arrangement(c, alpha)
        if arr is None:
            raise ReductionError(
                f"clause {i + 1} = {c}: its only satisfied literal sits at an end slot of a clause "
                "whose three slots share one variable; no left/middle/right placement keeps the "
                "variable's occurrences in order")
        left, mid, right = arr
        cv = 7 * i + 1
        boxes[cv] = (Coord(7 * i + 2), Coord(7 * i + 5), Coord(0), Coord(1))
        x = {
            (mid, 0): (Coord(7 * i + 3), Coord(7 * i + 4)),
            (mid, 1): (Coord(7 * i + 3), Coord(7 * i + 4)),
            (left, 0): (Coord(7 * i + 1, 1), Coord(7 * i + 2, 1)),
            (left, 1): (Coord(7 * i, 2), Coord(7 * i + 1, 2)),
            (right, 0): (Coord(7 * i + 5, -1), Coord(7 * i + 6, -1)),
            (right, 1): (Coord(7 * i + 6, -2), Coord(7 * i + 7, -2)),
        }
        for k, lit in enumerate(c):
            for leaf, l_ in ((0, lit), (1, -lit)):
                boxes[cv + 1 + 2 * k + leaf] = x[(k, leaf)] + y_of(l_)
        hulls.append((Coord(7 * i, 2), Coord(7 * i + 7, -2)))
    # ε-shifted blocks of neighbouring clauses must stay apart.
    assert all(a[1] < b[0] for a, b in zip(hulls, hulls[1:])), hulls
    n = 7 * len(f.clauses)
    return Drawing(tuple(rect(*boxes[v]) for v in range(1, n + 1)), Family.RECT)


def decode_rsvr_assignment(d: Drawing, idx: GadgetIndex) -> dict[int, bool]:
    """T iff the variable is positively arranged: ``-v`` above ``v`` above clauses, or the reverse."""
    if idx.mode != SAT_MODE:
        raise ReductionError(f"gadget index is for {idx.mode}")
    _require_valid(d, idx)
    alpha = {v: False for v in range(1, idx.n_vars + 1)}
    if not idx.clause_gadget:
        return alpha
    yc = _y_hull(d, idx.clause_gadget)
    for var in sorted(set(idx.var_gadgets) | set(idx.neg_gadgets)):
        hulls = [yc] + [_y_hull(d, g[var]) for g in (idx.var_gadgets, idx.neg_gadgets) if var in g]
        for a, b in permutations(hulls, 2):
            if a is not b and not (_below(a, b) or _below(b, a)):
                raise ReductionError(f"gadgets of v{var} are not totally ordered by y")
        if len(hulls) < 3:
            continue
        _, yv, yn = hulls
        alpha[var] = (_below(yc, yv) and _below(yv, yn)) or (_below(yn, yv) and _below(yv, yc))
    return alpha
