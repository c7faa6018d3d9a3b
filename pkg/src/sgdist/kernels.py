"""Hot numeric kernels: all-sources sign-aware BFS and a cyclic Jacobi
eigensolver.

Two interchangeable implementations exist for each kernel: a numba
@njit-compiled one and a pure-numpy one.  The active backend is chosen at
import time from the SGDIST_NUMBA environment variable:

    SGDIST_NUMBA=1   require numba (ImportError if missing)
    SGDIST_NUMBA=0   force the pure-numpy path
    unset            numba when importable, numpy otherwise

Shortest-path counts saturate at PATH_COUNT_CAP so they fit in int64.
Saturation keeps equality-with-1 queries exact (geodeticity needs nothing
more); exact big-integer counts live in distance.sign_bfs.
"""

from __future__ import annotations

import math
import os

import numpy as np

PATH_COUNT_CAP = 1 << 40

_flag = os.environ.get("SGDIST_NUMBA", "").strip().lower()
if _flag in ("0", "false", "no", "off"):
    _use_numba = False
elif _flag in ("1", "true", "yes", "on"):
    from numba import njit  # let ImportError surface: numba was demanded

    _use_numba = True
else:
    try:
        from numba import njit

        _use_numba = True
    except ImportError:
        _use_numba = False

USE_NUMBA = _use_numba
BACKEND = "numba" if USE_NUMBA else "numpy"


# -- pure-numpy implementations ------------------------------------------


def reach_all_numpy(n, indptr, indices, signs):
    """All-sources BFS with sign propagation over the shortest-path DAG.

    Input is a CSR adjacency (0-based): indptr int64, indices int32,
    signs int8.  Returns (dist int32, plus bool, minus bool, counts int64)
    as n-by-n arrays; row s is the table for source s.  Propagates whole
    BFS layers at a time with integer matrix products.
    """
    rows = np.repeat(np.arange(n, dtype=np.int64), np.diff(indptr))
    cols = indices.astype(np.int64)
    pos = signs > 0
    apos = np.zeros((n, n), dtype=np.int64)
    aneg = np.zeros((n, n), dtype=np.int64)
    apos[rows[pos], cols[pos]] = 1
    aneg[rows[~pos], cols[~pos]] = 1
    adj = apos + aneg

    dist = np.full((n, n), -1, dtype=np.int32)
    plus = np.zeros((n, n), dtype=np.bool_)
    minus = np.zeros((n, n), dtype=np.bool_)
    counts = np.zeros((n, n), dtype=np.int64)
    diag = np.arange(n)
    dist[diag, diag] = 0
    plus[diag, diag] = True
    counts[diag, diag] = 1

    frontier = np.eye(n, dtype=np.bool_)
    level = 0
    while True:
        level += 1
        nxt = ((frontier.astype(np.int64) @ adj) > 0) & (dist < 0)
        if not nxt.any():
            break
        dist[nxt] = level
        # counts: sum over DAG predecessors, then clamp (see module docstring)
        csum = np.where(frontier, counts, 0) @ adj
        counts[nxt] = np.minimum(csum, PATH_COUNT_CAP)[nxt]
        pf = (plus & frontier).astype(np.int64)
        mf = (minus & frontier).astype(np.int64)
        plus |= ((pf @ apos + mf @ aneg) > 0) & nxt
        minus |= ((mf @ apos + pf @ aneg) > 0) & nxt
        frontier = nxt
    return dist, plus, minus, counts


def jacobi_numpy(a, tol, max_sweeps):
    """Cyclic Jacobi on a float64 symmetric matrix (mutated in place).

    Returns (eigenvalues unsorted, sweeps used, converged flag).  Stops when
    the off-diagonal Frobenius norm drops to tol.
    """
    n = a.shape[0]
    iu = np.triu_indices(n, 1)
    sweep = 0
    while True:
        off = math.sqrt(2.0) * float(np.linalg.norm(a[iu])) if n > 1 else 0.0
        if off <= tol:
            return np.diagonal(a).copy(), sweep, True
        if sweep == max_sweeps:
            return np.diagonal(a).copy(), sweep, False
        sweep += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                app, aqq = a[p, p], a[q, q]
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = colp - s * (colq + tau * colp)
                a[:, q] = colq + s * (colp - tau * colq)
                a[p, :] = a[:, p]
                a[q, :] = a[:, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0


# -- numba implementations (same contracts) ------------------------------

if USE_NUMBA:

    @njit(cache=True)
    def reach_all_numba(n, indptr, indices, signs):
        dist = np.full((n, n), -1, dtype=np.int32)
        plus = np.zeros((n, n), dtype=np.bool_)
        minus = np.zeros((n, n), dtype=np.bool_)
        counts = np.zeros((n, n), dtype=np.int64)
        queue = np.empty(n, dtype=np.int32)
        for s in range(n):
            d = dist[s]
            pl = plus[s]
            mi = minus[s]
            ct = counts[s]
            d[s] = 0
            pl[s] = True
            ct[s] = 1
            head = 0
            tail = 1
            queue[0] = s
            # queue pops in layer order, so every DAG predecessor of a
            # vertex is fully settled before that vertex pops
            while head < tail:
                x = queue[head]
                head += 1
                dx = d[x]
                for k in range(indptr[x], indptr[x + 1]):
                    y = indices[k]
                    if d[y] == -1:
                        d[y] = dx + 1
                        queue[tail] = y
                        tail += 1
                    if d[y] == dx + 1:
                        if signs[k] > 0:
                            if pl[x]:
                                pl[y] = True
                            if mi[x]:
                                mi[y] = True
                        else:
                            if pl[x]:
                                mi[y] = True
                            if mi[x]:
                                pl[y] = True
                        nc = ct[y] + ct[x]
                        if nc > PATH_COUNT_CAP:
                            nc = PATH_COUNT_CAP
                        ct[y] = nc
        return dist, plus, minus, counts

    @njit(cache=True)
    def jacobi_numba(a, tol, max_sweeps):
        n = a.shape[0]
        eig = np.empty(n, dtype=np.float64)
        sweep = 0
        while True:
            off = 0.0
            for i in range(n - 1):
                for j in range(i + 1, n):
                    off += a[i, j] * a[i, j]
            off = math.sqrt(2.0 * off)
            if off <= tol:
                for i in range(n):
                    eig[i] = a[i, i]
                return eig, sweep, True
            if sweep == max_sweeps:
                for i in range(n):
                    eig[i] = a[i, i]
                return eig, sweep, False
            sweep += 1
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if apq == 0.0:
                        continue
                    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                    sgn = 1.0 if theta >= 0.0 else -1.0
                    t = sgn / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    c = 1.0 / math.sqrt(t * t + 1.0)
                    s = t * c
                    tau = s / (1.0 + c)
                    app = a[p, p]
                    aqq = a[q, q]
                    for i in range(n):
                        if i != p and i != q:
                            aip = a[i, p]
                            aiq = a[i, q]
                            a[i, p] = aip - s * (aiq + tau * aip)
                            a[p, i] = a[i, p]
                            a[i, q] = aiq + s * (aip - tau * aiq)
                            a[q, i] = a[i, q]
                    a[p, p] = app - t * apq
                    a[q, q] = aqq + t * apq
                    a[p, q] = 0.0
                    a[q, p] = 0.0

    reach_all = reach_all_numba
    jacobi = jacobi_numba

    # warm up the jit cache so first real use is cheap
    _ip = np.array([0, 1, 2], dtype=np.int64)
    _ix = np.array([1, 0], dtype=np.int32)
    _sg = np.array([1, 1], dtype=np.int8)
    reach_all(2, _ip, _ix, _sg)
    jacobi(np.array([[2.0, 1.0], [1.0, 2.0]]), 1e-10, 100)
else:
    reach_all_numba = None
    jacobi_numba = None
    reach_all = reach_all_numpy
    jacobi = jacobi_numpy
