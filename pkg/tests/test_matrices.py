import numpy as np
import pytest

import sgdist as sg

from corpus import random_connected_signed


def k4e(signs):
    pairs = ((1, 2), (1, 3), (1, 4), (2, 3), (3, 4))
    return sg.SignedGraph(4, [(u, v, s) for (u, v), s in zip(pairs, signs)])


CASE1 = k4e((-1, 1, 1, -1, 1))
CASE2 = k4e((1, -1, 1, 1, 1))
CASE3 = k4e((-1, 1, 1, 1, 1))

# hand-checked signed distance matrices for the three K4-minus-an-edge cases
CASE1_DPM = np.array(
    [
        [0, -1, 1, 1],
        [-1, 0, -1, -2],
        [1, -1, 0, 1],
        [1, -2, 1, 0],
    ]
)
CASE2_DPM = np.array(
    [
        [0, 1, -1, 1],
        [1, 0, 1, 2],
        [-1, 1, 0, 1],
        [1, 2, 1, 0],
    ]
)
CASE3_DMAX = np.array(
    [
        [0, -1, 1, 1],
        [-1, 0, 1, 2],
        [1, 1, 0, 1],
        [1, 2, 1, 0],
    ]
)
CASE3_DMIN = np.array(
    [
        [0, -1, 1, 1],
        [-1, 0, 1, -2],
        [1, 1, 0, 1],
        [1, -2, 1, 0],
    ]
)


class TestFrozenMatrices:
    def test_case1(self):
        assert np.array_equal(sg.d_pm_matrix(CASE1), CASE1_DPM)
        assert np.array_equal(sg.d_max_matrix(CASE1), CASE1_DPM)
        assert np.array_equal(sg.d_min_matrix(CASE1), CASE1_DPM)

    def test_case2(self):
        assert np.array_equal(sg.d_pm_matrix(CASE2), CASE2_DPM)

    def test_case3(self):
        assert np.array_equal(sg.d_max_matrix(CASE3), CASE3_DMAX)
        assert np.array_equal(sg.d_min_matrix(CASE3), CASE3_DMIN)

    def test_case3_has_no_common_matrix(self):
        with pytest.raises(sg.NotCompatibleError) as exc:
            sg.d_pm_matrix(CASE3)
        assert exc.value.witness == (2, 4)


class TestBasics:
    def test_k2(self):
        g = sg.SignedGraph(2, [(1, 2, -1)])
        assert np.array_equal(sg.d_pm_matrix(g), [[0, -1], [-1, 0]])
        assert np.array_equal(sg.adjacency_matrix(g), [[0, -1], [-1, 0]])

    def test_unsigned_is_abs(self):
        rng = np.random.default_rng(17)
        for _ in range(60):
            g = random_connected_signed(rng, int(rng.integers(2, 8)))
            du = sg.unsigned_distance_matrix(g)
            assert np.array_equal(np.abs(sg.d_max_matrix(g)), du)
            assert np.array_equal(np.abs(sg.d_min_matrix(g)), du)

    def test_max_dominates_min(self):
        rng = np.random.default_rng(18)
        for _ in range(60):
            g = random_connected_signed(rng, int(rng.integers(2, 8)))
            assert (sg.d_max_matrix(g) >= sg.d_min_matrix(g)).all()

    def test_symmetric_zero_diagonal(self):
        for g in (CASE1, CASE2, CASE3, sg.unbalanced_cycle(7)):
            for m in (sg.d_max_matrix(g), sg.d_min_matrix(g)):
                assert sg.check_symmetric_zero_diagonal(m)
        assert not sg.check_symmetric_zero_diagonal(np.array([[1]]))
        assert not sg.check_symmetric_zero_diagonal(np.array([[0, 1], [2, 0]]))

    def test_adjacency_example(self):
        a = sg.adjacency_matrix(sg.unbalanced_cycle(3))
        assert np.array_equal(a, [[0, 1, -1], [1, 0, 1], [-1, 1, 0]])

    def test_negation_flips_adjacency(self):
        g = CASE2
        assert np.array_equal(
            sg.adjacency_matrix(sg.negate(g)), -sg.adjacency_matrix(g)
        )


class TestAssociatedComplete:
    def test_case1_adds_negative_pair(self):
        h = sg.associated_complete(CASE1, "max")
        assert h.n == 4 and h.m == 6
        assert h.sign(2, 4) == -1
        # original edges keep their signs
        for u, v, s in CASE1.edges:
            assert h.sign(u, v) == s

    def test_case3_max_min_differ(self):
        hmax = sg.associated_complete(CASE3, "max")
        hmin = sg.associated_complete(CASE3, "min")
        assert hmax.sign(2, 4) == 1
        assert hmin.sign(2, 4) == -1

    def test_complete_graph_unchanged(self):
        g = sg.complete_graph(4)
        assert sg.associated_complete(g, "max") == g
        assert sg.associated_complete(g, "min") == g

    def test_adjacency_of_associated_matches_sign_pattern(self):
        rng = np.random.default_rng(29)
        for _ in range(40):
            g = random_connected_signed(rng, int(rng.integers(2, 8)))
            dm = sg.d_max_matrix(g)
            a = sg.adjacency_matrix(sg.associated_complete(g, "max"))
            off = ~np.eye(g.n, dtype=bool)
            assert np.array_equal(a[off], np.sign(dm)[off])

    def test_which_validated(self):
        with pytest.raises(ValueError):
            sg.associated_complete(CASE1, "best")
        with pytest.raises(ValueError):
            sg.distance_weights(CASE1, "best")


def test_distance_weights_round_trip():
    w = sg.distance_weights(CASE3, "min")
    assert w[(2, 4)] == -2 and w[(1, 2)] == -1
    m = sg.d_min_matrix(CASE3)
    for (u, v), val in w.items():
        assert val == m[u - 1, v - 1]
    assert len(w) == 6


def test_csv_format():
    m = np.array([[0, 1, -1], [1, 0, 1], [-1, 1, 0]])
    assert sg.matrix_to_csv(m) == "0,1,-1\n1,0,1\n-1,1,0\n"


def test_json_dict():
    m = np.array([[0, -2], [-2, 0]])
    assert sg.matrix_to_json_dict(m) == {"n": 2, "entries": [[0, -2], [-2, 0]]}
