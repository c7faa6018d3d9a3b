import numpy as np
import pytest

import sgdist as sg
from sgdist import kernels

from corpus import random_connected_signed


needs_numba = pytest.mark.skipif(
    kernels.reach_all_numba is None, reason="numba backend not active"
)


def _random_symmetric(rng, n):
    a = rng.normal(size=(n, n))
    return (a + a.T) / 2.0


def test_backend_flag_is_consistent():
    assert kernels.BACKEND in ("numba", "numpy")
    assert (kernels.BACKEND == "numba") == kernels.USE_NUMBA


class TestReach:
    def test_matches_pure_python_bfs(self):
        rng = np.random.default_rng(1001)
        for _ in range(120):
            n = int(rng.integers(2, 9))
            g = random_connected_signed(rng, n)
            indptr, indices, signs = g.csr
            dist, plus, minus, counts = kernels.reach_all(g.n, indptr, indices, signs)
            for u in g.vertices():
                table = sg.sign_bfs(g, u)
                for v in g.vertices():
                    assert dist[u - 1, v - 1] == table.dist[v]
                    assert bool(plus[u - 1, v - 1]) == table.plus_reach[v]
                    assert bool(minus[u - 1, v - 1]) == table.minus_reach[v]
                    got = int(counts[u - 1, v - 1])
                    want = table.path_count[v]
                    assert got == min(want, kernels.PATH_COUNT_CAP)

    @needs_numba
    def test_backends_agree_exactly(self):
        rng = np.random.default_rng(77)
        for _ in range(150):
            n = int(rng.integers(2, 10))
            g = random_connected_signed(rng, n)
            indptr, indices, signs = g.csr
            out_nb = kernels.reach_all_numba(g.n, indptr, indices, signs)
            out_np = kernels.reach_all_numpy(g.n, indptr, indices, signs)
            for a, b in zip(out_nb, out_np):
                assert np.array_equal(a, b)

    def test_counts_saturate_not_overflow(self):
        # stacked K_{2,2} layers double the path count per layer; 90 layers
        # overflows int64 unless the kernel clamps
        layers = 90
        edges = []
        for i in range(layers):
            a, b = 2 * i + 1, 2 * i + 2
            c, d = a + 2, b + 2
            edges += [(a, c, 1), (a, d, 1), (b, c, 1), (b, d, 1)]
        g = sg.SignedGraph(2 * layers + 2, edges)
        indptr, indices, signs = g.csr
        _, _, _, counts = kernels.reach_all(g.n, indptr, indices, signs)
        assert counts.max() == kernels.PATH_COUNT_CAP
        assert (counts >= 0).all()
        # exact python bigint count for the far corner: one free choice per
        # crossing except the last, which must land on the queried vertex
        table = sg.sign_bfs(g, 1)
        assert table.path_count[2 * layers + 1] == 2 ** (layers - 1)


class TestJacobi:
    def test_matches_lapack(self):
        rng = np.random.default_rng(5150)
        for _ in range(60):
            n = int(rng.integers(1, 12))
            a = _random_symmetric(rng, n)
            vals, _, ok = kernels.jacobi(a.copy(), 1e-10, 100)
            assert ok
            want = np.linalg.eigvalsh(a)
            assert np.allclose(np.sort(vals), want, atol=1e-9)

    @needs_numba
    def test_backends_agree(self):
        rng = np.random.default_rng(31)
        for _ in range(40):
            n = int(rng.integers(2, 10))
            a = _random_symmetric(rng, n)
            va, sa, oka = kernels.jacobi_numba(a.copy(), 1e-10, 100)
            vb, sb, okb = kernels.jacobi_numpy(a.copy(), 1e-10, 100)
            assert oka and okb
            assert np.allclose(np.sort(va), np.sort(vb), atol=1e-9)

    def test_diagonal_input_is_fixed_point(self):
        a = np.diag([3.0, -1.0, 0.5])
        vals, sweeps, ok = kernels.jacobi(a.copy(), 1e-10, 100)
        assert ok and sweeps == 0
        assert np.array_equal(np.sort(vals), np.array([-1.0, 0.5, 3.0]))

    def test_input_not_mutated_by_wrapper(self):
        a = np.array([[0.0, 2.0], [2.0, 0.0]])
        before = a.copy()
        sg.eig_sym(a)
        assert np.array_equal(a, before)
