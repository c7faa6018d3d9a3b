"""Timing comparison of the two kernel backends.

Runs the all-sources sign-aware BFS and the cyclic Jacobi solver through
both implementations in one process (the numba functions are reached
directly, so no SGDIST_NUMBA juggling is needed) and prints best-of-three
wall times.  numpy's eigvalsh is included as a reference point for the
Jacobi rows.
"""

import sys
import time

import numpy as np

import sgdist as sg
from sgdist import kernels


def sparse_connected(rng, n, extra):
    """Random spanning tree plus `extra` random chords, random signs."""
    edges = []
    seen = set()
    for v in range(2, n + 1):
        u = int(rng.integers(1, v))
        edges.append((u, v, 1 if rng.random() < 0.5 else -1))
        seen.add((u, v))
    while len(edges) < n - 1 + extra:
        u = int(rng.integers(1, n + 1))
        v = int(rng.integers(1, n + 1))
        if u == v:
            continue
        key = (min(u, v), max(u, v))
        if key in seen:
            continue
        seen.add(key)
        edges.append((key[0], key[1], 1 if rng.random() < 0.5 else -1))
    return sg.SignedGraph(n, edges)


def best_of(f, repeats=3):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        f()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_reach(rng):
    print("all-sources sign BFS (dist, reachable signs, path counts)")
    print(f"{'n':>6} {'m':>7} {'numpy':>10} {'numba':>10} {'speedup':>8}")
    for n in (100, 300, 600):
        g = sparse_connected(rng, n, 3 * n)
        indptr, indices, signs = g.csr
        t_np = best_of(lambda: kernels.reach_all_numpy(g.n, indptr, indices, signs))
        if kernels.reach_all_numba is not None:
            t_nb = best_of(lambda: kernels.reach_all_numba(g.n, indptr, indices, signs))
            out_nb = kernels.reach_all_numba(g.n, indptr, indices, signs)
            out_np = kernels.reach_all_numpy(g.n, indptr, indices, signs)
            assert all(np.array_equal(a, b) for a, b in zip(out_nb, out_np))
            print(f"{n:>6} {g.m:>7} {t_np:>9.4f}s {t_nb:>9.4f}s {t_np / t_nb:>7.1f}x")
        else:
            print(f"{n:>6} {g.m:>7} {t_np:>9.4f}s {'-':>10} {'-':>8}")


def bench_jacobi():
    print()
    print("cyclic Jacobi on signed distance matrices of odd cycles")
    print(f"{'n':>6} {'numpy':>10} {'numba':>10} {'eigvalsh':>10} {'numba err':>10}")
    for n in (61, 121):
        m = sg.d_pm_matrix(sg.unbalanced_cycle(n)).astype(np.float64)
        t_np = best_of(lambda: kernels.jacobi_numpy(m.copy(), 1e-10, 100))
        t_ref = best_of(lambda: np.linalg.eigvalsh(m))
        if kernels.jacobi_numba is not None:
            t_nb = best_of(lambda: kernels.jacobi_numba(m.copy(), 1e-10, 100))
            vals, _, ok = kernels.jacobi_numba(m.copy(), 1e-10, 100)
            assert ok
            err = float(np.abs(np.sort(vals) - np.linalg.eigvalsh(m)).max())
            print(f"{n:>6} {t_np:>9.4f}s {t_nb:>9.4f}s {t_ref:>9.4f}s {err:>10.1e}")
        else:
            print(f"{n:>6} {t_np:>9.4f}s {'-':>10} {t_ref:>9.4f}s {'-':>10}")


def main():
    print(f"python {sys.version.split()[0]}, numpy {np.__version__}, "
          f"active backend: {kernels.BACKEND}")
    rng = np.random.default_rng(42)
    bench_reach(rng)
    bench_jacobi()


if __name__ == "__main__":
    main()
