"""Integer kernels behind the visibility engine and the brute-force oracle.

Shapes arrive as parallel int64 arrays ``kind, l, r, b, t`` where ``kind`` is
:data:`BOX` (rectangle / square) or :data:`ELL` (⌞, corner at ``(l, b)``).
Coordinates are order-preserving integer encodings of :class:`Coord` values.
Sample abscissae live on the doubled lattice: every endpoint ``2*v`` plus the
midpoint ``v_k + v_{k+1}`` of consecutive distinct endpoints.

The ``*_loop`` functions are written for numba and are compiled when it is
enabled; the ``*_numpy`` functions are vectorised equivalents used when
``SVRKIT_DISABLE_NUMBA`` is set.
"""
import numpy as np

from ._accel import USE_NUMBA, njit

BOX = 0
ELL = 1

FOUND = 1
EXHAUSTED = 0
CAPPED = 2


# --------------------------------------------------------------------------
# visibility by vertical stabbing
# --------------------------------------------------------------------------

@njit
def vis_loop(l, r, b, k, adj, xs, st_lo, st_id):
    """Mark ``adj[i, j]`` for every vertical line-of-sight among shapes ``0..k-1``.

    A vertical line at ``x`` hits a shape iff ``l <= x <= r`` (for an ⌞ it
    hits the whole vertical bar at the corner, otherwise the horizontal bar),
    and every hit starts at ``b``.  With disjoint shapes, sorting hits by
    ``b`` orders them along the line.  ``xs`` (>= 2k), ``st_lo`` and
    ``st_id`` (>= k) are scratch buffers.
    """
    m = 0
    for i in range(k):
        xs[m] = l[i]
        xs[m + 1] = r[i]
        m += 2
    xs[:m].sort()
    nd = 0
    for i in range(m):
        if nd == 0 or xs[i] != xs[nd - 1]:
            xs[nd] = xs[i]
            nd += 1
    for q in range(2 * nd - 1):
        if q % 2 == 0:
            s = 2 * xs[q // 2]
        else:
            s = xs[q // 2] + xs[q // 2 + 1]
        cnt = 0
        for i in range(k):
            if s < 2 * l[i] or s > 2 * r[i]:
                continue
            lo = b[i]
            j = cnt
            while j > 0 and st_lo[j - 1] > lo:
                st_lo[j] = st_lo[j - 1]
                st_id[j] = st_id[j - 1]
                j -= 1
            st_lo[j] = lo
            st_id[j] = i
            cnt += 1
        for j in range(cnt - 1):
            u = st_id[j]
            v = st_id[j + 1]
            adj[u, v] = True
            adj[v, u] = True


@njit
def vis_pair_loop(l, r, b, t):
    k = l.shape[0]
    av = np.zeros((k, k), np.bool_)
    ah = np.zeros((k, k), np.bool_)
    xs = np.empty(2 * k + 2, np.int64)
    st_lo = np.empty(k + 1, np.int64)
    st_id = np.empty(k + 1, np.int64)
    vis_loop(l, r, b, k, av, xs, st_lo, st_id)
    vis_loop(b, t, l, k, ah, xs, st_lo, st_id)
    return av, ah


def samples_numpy(l, r):
    """Doubled-lattice sample abscissae for the given x-endpoints."""
    xs = np.unique(np.concatenate([l, r]))
    out = np.empty(2 * len(xs) - 1, np.int64) if len(xs) else np.empty(0, np.int64)
    out[0::2] = 2 * xs
    out[1::2] = xs[:-1] + xs[1:]
    return out


def vis_numpy(l, r, b):
    """Vertical visibility adjacency, vectorised over all sample lines."""
    k = len(l)
    adj = np.zeros((k, k), bool)
    if k < 2:
        return adj
    s = samples_numpy(l, r)[:, None]
    hit = (2 * l[None, :] <= s) & (s <= 2 * r[None, :])
    key = np.where(hit, b[None, :], np.iinfo(np.int64).max)
    order = np.argsort(key, axis=1, kind="stable")
    ok = np.take_along_axis(hit, order, axis=1)
    pair = ok[:, :-1] & ok[:, 1:]
    u = order[:, :-1][pair]
    v = order[:, 1:][pair]
    adj[u, v] = True
    adj[v, u] = True
    return adj


def vis_pair_numpy(l, r, b, t):
    return vis_numpy(l, r, b), vis_numpy(b, t, l)


def visibility_pair(l, r, b, t):
    """``(vertical, horizontal)`` adjacency matrices."""
    if USE_NUMBA:
        return vis_pair_loop(l, r, b, t)
    return vis_pair_numpy(l, r, b, t)


# --------------------------------------------------------------------------
# pairwise intersection
# --------------------------------------------------------------------------

@njit
def _meet_loop(kind, l, r, b, t, i, j):
    # Each shape is one box (BOX) or two degenerate boxes (ELL).
    ni = 2 if kind[i] == ELL else 1
    nj = 2 if kind[j] == ELL else 1
    for p in range(ni):
        if kind[i] == ELL:
            pl, pr = l[i], (r[i] if p == 0 else l[i])
            pb, pt = b[i], (b[i] if p == 0 else t[i])
        else:
            pl, pr, pb, pt = l[i], r[i], b[i], t[i]
        for q in range(nj):
            if kind[j] == ELL:
                ql, qr = l[j], (r[j] if q == 0 else l[j])
                qb, qt = b[j], (b[j] if q == 0 else t[j])
            else:
                ql, qr, qb, qt = l[j], r[j], b[j], t[j]
            if pl <= qr and ql <= pr and pb <= qt and qb <= pt:
                return True
    return False


@njit
def overlaps_loop(kind, l, r, b, t):
    k = l.shape[0]
    out = np.zeros((k, k), np.bool_)
    for i in range(k):
        for j in range(i + 1, k):
            if _meet_loop(kind, l, r, b, t, i, j):
                out[i, j] = True
                out[j, i] = True
    return out


def _boxes_numpy(kind, l, r, b, t):
    ell = kind == ELL
    # box 0: full rect or the horizontal bar; box 1: vertical bar (or a copy).
    b0 = np.stack([l, r, b, np.where(ell, b, t)], axis=1)
    b1 = np.stack([l, np.where(ell, l, r), b, t], axis=1)
    return b0, b1


def overlaps_numpy(kind, l, r, b, t):
    k = len(l)
    out = np.zeros((k, k), bool)
    boxes = _boxes_numpy(kind, l, r, b, t)
    for p in boxes:
        for q in boxes:
            meet = ((p[:, None, 0] <= q[None, :, 1]) & (q[None, :, 0] <= p[:, None, 1])
                    & (p[:, None, 2] <= q[None, :, 3]) & (q[None, :, 2] <= p[:, None, 3]))
            out |= meet
    np.fill_diagonal(out, False)
    return out | out.T


def overlaps(kind, l, r, b, t):
    if USE_NUMBA:
        return overlaps_loop(kind, l, r, b, t)
    return overlaps_numpy(kind, l, r, b, t)


# --------------------------------------------------------------------------
# cycle premise: an endpoint of X(w) strictly inside X(u) ∩ X(v) with
# b(u) < b(w) < b(v)
# --------------------------------------------------------------------------

@njit
def cycle_premise_loop(l, r, b):
    k = l.shape[0]
    for u in range(k):
        for v in range(k):
            if v == u or not b[u] < b[v]:
                continue
            lo = max(l[u], l[v])
            hi = min(r[u], r[v])
            if lo >= hi:
                continue
            for w in range(k):
                if w == u or w == v:
                    continue
                if not (b[u] < b[w] < b[v]):
                    continue
                if lo < l[w] < hi or lo < r[w] < hi:
                    return np.array([u, v, w], np.int64)
    return np.empty(0, np.int64)


def cycle_premise_numpy(l, r, b):
    lo = np.maximum(l[:, None], l[None, :])
    hi = np.minimum(r[:, None], r[None, :])
    uv = (lo < hi) & (b[:, None] < b[None, :])
    lo3, hi3 = lo[:, :, None], hi[:, :, None]
    lw, rw, bw = l[None, None, :], r[None, None, :], b[None, None, :]
    inside = ((lo3 < lw) & (lw < hi3)) | ((lo3 < rw) & (rw < hi3))
    between = (b[:, None, None] < bw) & (bw < b[None, :, None])
    hits = np.argwhere(uv[:, :, None] & inside & between)
    if len(hits):
        return hits[0].astype(np.int64)
    return np.empty(0, np.int64)


def cycle_premise(l, r, b):
    """First ``(u, v, w)`` satisfying the cycle premise, or an empty array."""
    if USE_NUMBA:
        return cycle_premise_loop(l, r, b)
    return cycle_premise_numpy(l, r, b)


# --------------------------------------------------------------------------
# backtracking placement
# --------------------------------------------------------------------------

@njit
def _partial_ok(kind, cl, cr, cb, ct, k, req_v, req_h, av, ah, xs, st_lo, st_id, leaf):
    """Check the placed prefix ``0..k-1`` (placement-order indices)."""
    new = k - 1
    for u in range(new):
        if _meet_loop(kind, cl, cr, cb, ct, u, new):
            return False
    for i in range(k):
        for j in range(k):
            av[i, j] = False
            ah[i, j] = False
    vis_loop(cl, cr, cb, k, av, xs, st_lo, st_id)
    vis_loop(cb, ct, cl, k, ah, xs, st_lo, st_id)
    for i in range(k):
        for j in range(i + 1, k):
            # Placing more shapes only blocks sight lines, so a missing
            # required edge can never come back.
            if req_v[i, j] and not av[i, j]:
                return False
            if req_h[i, j] and not ah[i, j]:
                return False
            if leaf and (av[i, j] != req_v[i, j] or ah[i, j] != req_h[i, j]):
                return False
    return True


@njit
def search_loop(kind_code, req_v, req_h, cand, lev_start, lev_end, distinct, max_val, max_nodes):
    """Depth-first placement, level ``i`` chooses a row of ``cand`` for vertex ``i``.

    Matrices and levels are in placement order.  With ``distinct`` set, no
    two shapes may share an x-endpoint value or a y-endpoint value.
    Returns ``(status, nodes, placement)``.
    """
    n = req_v.shape[0]
    kind = np.full(n, kind_code, np.int64)
    cl = np.zeros(n, np.int64)
    cr = np.zeros(n, np.int64)
    cb = np.zeros(n, np.int64)
    ct = np.zeros(n, np.int64)
    av = np.zeros((n, n), np.bool_)
    ah = np.zeros((n, n), np.bool_)
    xs = np.empty(2 * n + 2, np.int64)
    st_lo = np.empty(n + 1, np.int64)
    st_id = np.empty(n + 1, np.int64)
    usedx = np.zeros(max_val + 2, np.bool_)
    usedy = np.zeros(max_val + 2, np.bool_)
    choice = np.full(n, -1, np.int64)
    placed = np.zeros(n, np.bool_)
    out = np.zeros((n, 4), np.int64)
    nodes = 0
    if n == 0:
        return FOUND, nodes, out
    level = 0
    choice[0] = lev_start[0] - 1
    while level >= 0:
        if placed[level]:
            if distinct:
                usedx[cl[level]] = False
                usedx[cr[level]] = False
                usedy[cb[level]] = False
                usedy[ct[level]] = False
            placed[level] = False
        c = choice[level] + 1
        advanced = False
        while c < lev_end[level]:
            x0 = cand[c, 0]
            x1 = cand[c, 1]
            y0 = cand[c, 2]
            y1 = cand[c, 3]
            if distinct and (usedx[x0] or usedx[x1] or usedy[y0] or usedy[y1]):
                c += 1
                continue
            if nodes >= max_nodes:
                return CAPPED, nodes, out
            nodes += 1
            cl[level] = x0
            cr[level] = x1
            cb[level] = y0
            ct[level] = y1
            if _partial_ok(kind, cl, cr, cb, ct, level + 1, req_v, req_h, av, ah,
                           xs, st_lo, st_id, level == n - 1):
                advanced = True
                break
            c += 1
        if not advanced:
            level -= 1
            continue
        choice[level] = c
        placed[level] = True
        if distinct:
            usedx[cl[level]] = True
            usedx[cr[level]] = True
            usedy[cb[level]] = True
            usedy[ct[level]] = True
        if level == n - 1:
            for i in range(n):
                out[i, 0] = cl[i]
                out[i, 1] = cr[i]
                out[i, 2] = cb[i]
                out[i, 3] = ct[i]
            return FOUND, nodes, out
        level += 1
        choice[level] = lev_start[level] - 1
    return EXHAUSTED, nodes, out
