# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the interval-arrangement hot loops.

Mirrors the contracts of ``_pykernels``; see that module for the
function-level documentation.
"""
import numpy as np

cimport numpy as cnp
from libc.math cimport INFINITY

cnp.import_array()


def word_offsets(double rho, digits, probs, int n):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] d = np.ascontiguousarray(digits, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] p = np.ascontiguousarray(probs, dtype=np.float64)
    cdef Py_ssize_t m1 = d.shape[0]
    cdef Py_ssize_t size = 1
    cdef Py_ssize_t level, j, t
    cdef cnp.ndarray[cnp.float64_t, ndim=1] offs = np.zeros(1)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] wts = np.ones(1)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] new_offs, new_wts
    cdef double[:] ov, wv, nov, nwv
    for level in range(n):
        new_offs = np.empty(size * m1)
        new_wts = np.empty(size * m1)
        ov = offs
        wv = wts
        nov = new_offs
        nwv = new_wts
        for j in range(m1):
            for t in range(size):
                nov[j * size + t] = d[j] + rho * ov[t]
                nwv[j * size + t] = p[j] * wv[t]
        offs = new_offs
        wts = new_wts
        size *= m1
    return offs, wts


def profile_cells(lo, hi, w, double eps=1e-12):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] alo = np.ascontiguousarray(lo, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ahi = np.ascontiguousarray(hi, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] aw = np.ascontiguousarray(w, dtype=np.float64)
    cdef Py_ssize_t k = alo.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] pts = np.concatenate([alo, ahi])
    cdef cnp.ndarray[cnp.intp_t, ndim=1] order = np.argsort(pts, kind="stable")
    cdef cnp.ndarray[cnp.intp_t, ndim=1] cluster = np.empty(2 * k, dtype=np.intp)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] reps = np.empty(2 * k)
    cdef double last_rep = -INFINITY
    cdef Py_ssize_t cid = -1
    cdef Py_ssize_t i, idx
    cdef double pval
    for i in range(2 * k):
        idx = order[i]
        pval = pts[idx]
        if pval - last_rep > eps:
            cid += 1
            last_rep = pval
            reps[cid] = pval
        cluster[idx] = cid
    cdef Py_ssize_t nreps = cid + 1
    cdef cnp.ndarray[cnp.float64_t, ndim=1] diff = np.zeros(nreps + 1)
    for i in range(k):
        diff[cluster[i]] += aw[i]
        diff[cluster[k + i]] -= aw[i]
    cdef Py_ssize_t ncells = nreps - 1 if nreps > 1 else 0
    cdef cnp.ndarray[cnp.float64_t, ndim=1] cells = np.empty(ncells)
    cdef double acc = 0.0
    for i in range(ncells):
        acc += diff[i]
        cells[i] = acc
    return reps[:nreps].copy(), cells


cdef double _sup_cell(double[:] offs, double scale, double[:] wts):
    cdef Py_ssize_t k = offs.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] coords = np.empty(2 * k)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] deltas = np.empty(2 * k)
    cdef Py_ssize_t i
    # closing endpoints first so ties resolve to open-cell counting
    for i in range(k):
        coords[i] = offs[i] + scale
        deltas[i] = -wts[i]
        coords[k + i] = offs[i]
        deltas[k + i] = wts[i]
    cdef cnp.ndarray[cnp.intp_t, ndim=1] order = np.lexsort(
        (np.concatenate([np.zeros(k), np.ones(k)]), coords))
    cdef double run = 0.0, best = -INFINITY
    for i in range(2 * k):
        run += deltas[order[i]]
        if run > best:
            best = run
    return best


def coverage_sup_levels(double rho, digits, probs, int n_max):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n_max)
    offs = np.zeros(1)
    wts = np.ones(1)
    cdef double scale = 1.0
    cdef int n
    for n in range(1, n_max + 1):
        offs, wts = _extend(rho, digits, probs, offs, wts)
        scale *= rho
        out[n - 1] = _sup_cell(offs, scale, wts)
    return out


def _extend(double rho, digits, probs, offs, wts):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] d = np.ascontiguousarray(digits, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] p = np.ascontiguousarray(probs, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] o = np.ascontiguousarray(offs, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] w = np.ascontiguousarray(wts, dtype=np.float64)
    cdef Py_ssize_t m1 = d.shape[0]
    cdef Py_ssize_t size = o.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] no = np.empty(size * m1)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] nw = np.empty(size * m1)
    cdef Py_ssize_t j, t
    for j in range(m1):
        for t in range(size):
            no[j * size + t] = d[j] + rho * o[t]
            nw[j * size + t] = p[j] * w[t]
    return no, nw


def coverage_min_levels(double rho, digits, probs, double a, double b,
                        int n_max, double eps=1e-12):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n_max)
    offs = np.zeros(1)
    wts = np.ones(1)
    cdef double scale = 1.0
    cdef int n
    cdef Py_ssize_t t, ncells
    cdef double best
    for n in range(1, n_max + 1):
        offs, wts = _extend(rho, digits, probs, offs, wts)
        scale *= rho
        bps, cells = profile_cells(offs + scale * a, offs + scale * b, wts, eps)
        if a < bps[0] - eps or b > bps[-1] + eps:
            out[n - 1] = 0.0
            continue
        best = INFINITY
        ncells = cells.shape[0]
        for t in range(ncells):
            if bps[t + 1] > a + eps and bps[t] < b - eps:
                if cells[t] < best:
                    best = cells[t]
        out[n - 1] = best if best != INFINITY else 0.0
    return out


def pointwise_weight(double rho, digits, probs, double x, int n,
                     double ilo, double ihi, double eps=1e-12):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] d = np.ascontiguousarray(digits, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] p = np.ascontiguousarray(probs, dtype=np.float64)
    cdef Py_ssize_t m1 = d.shape[0]
    # tail[t] = rho^t; reachable envelope of a depth-d prefix is
    # [off + scale * tail[n-d] * ilo, off + scale * (1 - tail[n-d] * (1-ihi))]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] tail = rho ** np.arange(n + 1, dtype=np.float64)
    # explicit DFS stack: (depth, offset, scale, weight)
    cdef Py_ssize_t cap = (n + 1) * m1 + 1
    cdef cnp.ndarray[cnp.intp_t, ndim=1] sdepth = np.empty(cap, dtype=np.intp)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] soff = np.empty(cap)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] sscale = np.empty(cap)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] sweight = np.empty(cap)
    cdef Py_ssize_t top = 0
    sdepth[0] = 0
    soff[0] = 0.0
    sscale[0] = 1.0
    sweight[0] = 1.0
    cdef double total = 0.0
    cdef Py_ssize_t depth
    cdef double off, scale, weight, rem
    cdef Py_ssize_t j
    while top >= 0:
        depth = sdepth[top]
        off = soff[top]
        scale = sscale[top]
        weight = sweight[top]
        top -= 1
        rem = tail[n - depth]
        if x < off + scale * rem * ilo - eps:
            continue
        if x > off + scale * (1.0 - rem * (1.0 - ihi)) + eps:
            continue
        if depth == n:
            total += weight
            continue
        # push children in reverse so symbol 0 pops first (DFS order)
        for j in range(m1 - 1, -1, -1):
            top += 1
            sdepth[top] = depth + 1
            soff[top] = off + scale * d[j]
            sscale[top] = scale * rho
            sweight[top] = weight * p[j]
    return total
