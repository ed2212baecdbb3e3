"""Pure-Python (numpy) kernels; fallback when the compiled core is absent.

Function contracts are shared with ``_ckernels``:

* ``word_offsets``      -- offsets/weights of all length-n word maps, in
                           lexicographic word order (first symbol most
                           significant).
* ``profile_cells``     -- merged breakpoints of an interval arrangement
                           plus the total weight covering each open cell.
* ``coverage_sup_levels`` / ``coverage_min_levels`` -- per-level extreme
                           cell weights for n = 1..n_max in one pass.
* ``pointwise_weight``  -- branch-and-prune evaluation of the total
                           weight of length-n words whose image of an
                           interval contains x.
"""
from __future__ import annotations

import numpy as np


def word_offsets(rho, digits, probs, n):
    """Offsets S_w(0) and weights p_w for every length-n word, lex order."""
    digits = np.asarray(digits, dtype=np.float64)
    probs = np.asarray(probs, dtype=np.float64)
    offs = np.zeros(1)
    wts = np.ones(1)
    for _ in range(n):
        offs = (digits[:, None] + rho * offs[None, :]).ravel()
        wts = (probs[:, None] * wts[None, :]).ravel()
    return offs, wts


def _merge_breakpoints(pts_sorted, eps):
    """Cluster ids for sorted points; a new cluster starts when the gap
    from the previous cluster representative exceeds eps."""
    n = len(pts_sorted)
    cluster = np.empty(n, dtype=np.intp)
    reps = []
    cid = -1
    last_rep = -np.inf
    for i in range(n):
        p = pts_sorted[i]
        if p - last_rep > eps:
            cid += 1
            last_rep = p
            reps.append(p)
        cluster[i] = cid
    return np.array(reps), cluster


def profile_cells(lo, hi, w, eps=1e-12):
    """Sweep-line coverage profile of closed weighted intervals.

    Returns (breakpoints, cell_weights): breakpoints are the eps-merged
    interval endpoints and cell_weights[t] is the total weight of
    intervals whose closure contains the open cell
    (breakpoints[t], breakpoints[t+1]).
    """
    lo = np.asarray(lo, dtype=np.float64)
    hi = np.asarray(hi, dtype=np.float64)
    w = np.asarray(w, dtype=np.float64)
    pts = np.concatenate([lo, hi])
    order = np.argsort(pts, kind="stable")
    reps, cluster_sorted = _merge_breakpoints(pts[order], eps)
    cluster = np.empty(len(pts), dtype=np.intp)
    cluster[order] = cluster_sorted
    lo_idx = cluster[: len(lo)]
    hi_idx = cluster[len(lo):]
    diff = np.zeros(len(reps) + 1)
    np.add.at(diff, lo_idx, w)
    np.add.at(diff, hi_idx, -w)
    cells = np.cumsum(diff)[: max(len(reps) - 1, 0)]
    return reps, cells


def _sup_cell_from_offsets(offs, scale, wts):
    lo = offs
    hi = offs + scale
    coords = np.concatenate([hi, lo])
    kinds = np.concatenate([np.zeros(len(hi)), np.ones(len(lo))])
    deltas = np.concatenate([-wts, wts])
    order = np.lexsort((kinds, coords))
    return np.cumsum(deltas[order]).max()


def coverage_sup_levels(rho, digits, probs, n_max):
    """Max cell weight of the [0,1]-image arrangement for each n=1..n_max."""
    digits = np.asarray(digits, dtype=np.float64)
    probs = np.asarray(probs, dtype=np.float64)
    offs = np.zeros(1)
    wts = np.ones(1)
    out = np.empty(n_max)
    for n in range(1, n_max + 1):
        offs = (digits[:, None] + rho * offs[None, :]).ravel()
        wts = (probs[:, None] * wts[None, :]).ravel()
        out[n - 1] = _sup_cell_from_offsets(offs, rho**n, wts)
    return out


def coverage_min_levels(rho, digits, probs, a, b, n_max, eps=1e-12):
    """Min cell weight over cells meeting (a,b), images of [a,b], per level.

    Returns 0.0 at a level whenever part of (a,b) is uncovered.
    """
    digits = np.asarray(digits, dtype=np.float64)
    probs = np.asarray(probs, dtype=np.float64)
    offs = np.zeros(1)
    wts = np.ones(1)
    out = np.empty(n_max)
    for n in range(1, n_max + 1):
        offs = (digits[:, None] + rho * offs[None, :]).ravel()
        wts = (probs[:, None] * wts[None, :]).ravel()
        scale = rho**n
        bps, cells = profile_cells(offs + scale * a, offs + scale * b, wts, eps)
        if a < bps[0] - eps or b > bps[-1] + eps:
            out[n - 1] = 0.0
            continue
        sel = (bps[1:] > a + eps) & (bps[:-1] < b - eps)
        out[n - 1] = cells[sel].min() if sel.any() else 0.0
    return out


def pointwise_weight(rho, digits, probs, x, n, ilo, ihi, eps=1e-12):
    """Total weight of length-n words w with x in S_w([ilo, ihi]), by
    depth-first descent.

    A depth-d prefix with offset c can only lead to leaves whose images
    of [ilo, ihi] lie inside the reachable envelope
    [c + rho^n ilo, c + rho^d - rho^n (1 - ihi)], so subtrees whose
    envelope misses x (with eps slack) are pruned.  Leaf tests are exact
    interval membership."""
    m1 = len(digits)
    tail = rho ** np.arange(n + 1)  # tail[d] = rho^d

    def descend(depth, offset, scale, weight):
        rem = tail[n - depth]
        env_lo = offset + scale * rem * ilo
        env_hi = offset + scale * (1.0 - rem * (1.0 - ihi))
        if x < env_lo - eps or x > env_hi + eps:
            return 0.0
        if depth == n:
            return weight
        total = 0.0
        child_scale = scale * rho
        for j in range(m1):
            total += descend(
                depth + 1, offset + scale * digits[j], child_scale, weight * probs[j]
            )
        return total

    return descend(0, 0.0, 1.0, 1.0)


def point_stack_weight(lo, hi, w, points, tol=1e-12):
    """Total weight of intervals containing each query point, counting
    intervals whose endpoint lies within tol of the point."""
    lo = np.asarray(lo, dtype=np.float64)
    hi = np.asarray(hi, dtype=np.float64)
    w = np.asarray(w, dtype=np.float64)
    points = np.atleast_1d(np.asarray(points, dtype=np.float64))
    lo_order = np.argsort(lo, kind="stable")
    hi_order = np.argsort(hi, kind="stable")
    lo_sorted = lo[lo_order]
    hi_sorted = hi[hi_order]
    w_lo = np.concatenate([[0.0], np.cumsum(w[lo_order])])
    w_hi = np.concatenate([[0.0], np.cumsum(w[hi_order])])
    opened = w_lo[np.searchsorted(lo_sorted, points + tol, side="right")]
    closed = w_hi[np.searchsorted(hi_sorted, points - tol, side="left")]
    return opened - closed
