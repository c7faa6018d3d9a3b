"""Distance and adjacency matrices of signed graphs.

All matrices are dense numpy int64 arrays indexed 0..n-1 for vertices
1..n, symmetric with zero diagonal.  d_max uses the best sign over each
pair's shortest paths, d_min the worst; when the two matrices agree the
common value is the unambiguous signed distance matrix.
"""

from __future__ import annotations

import numpy as np

from .core import SignedGraph
from .distance import all_pairs_reach
from .errors import NotCompatibleError


def unsigned_distance_matrix(g: SignedGraph) -> np.ndarray:
    dist, _, _, _ = all_pairs_reach(g)
    return dist.astype(np.int64)


def d_max_matrix(g: SignedGraph) -> np.ndarray:
    """Entry (u, v) is +d(u,v) unless every shortest uv-path is negative."""
    dist, plus, _, _ = all_pairs_reach(g)
    return np.where(plus, 1, -1) * dist.astype(np.int64)


def d_min_matrix(g: SignedGraph) -> np.ndarray:
    """Entry (u, v) is -d(u,v) unless every shortest uv-path is positive."""
    dist, _, minus, _ = all_pairs_reach(g)
    return np.where(minus, -1, 1) * dist.astype(np.int64)


def d_pm_matrix(g: SignedGraph) -> np.ndarray:
    """The common signed distance matrix; defined only for compatible graphs.

    Raises NotCompatibleError carrying the first incompatible pair in
    row-major order.  Not a silent fallback to d_max: callers asking for
    the unambiguous matrix must learn when it does not exist.
    """
    dist, plus, minus, _ = all_pairs_reach(g)
    both = plus & minus
    if both.any():
        u, v = np.argwhere(both)[0]
        return_pair = (int(u) + 1, int(v) + 1)
        raise NotCompatibleError(return_pair)
    return np.where(plus, 1, -1) * dist.astype(np.int64)


def adjacency_matrix(g: SignedGraph) -> np.ndarray:
    """Signed adjacency: entry (u, v) = sigma(uv) for edges, else 0."""
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v, s in g.edges:
        a[u - 1, v - 1] = s
        a[v - 1, u - 1] = s
    return a


def associated_complete(g: SignedGraph, which: str) -> SignedGraph:
    """Complete signed graph on V(g): existing edges keep their sign,
    each non-adjacent pair gets the best ("max") or worst ("min") sign
    over its shortest paths in g.
    """
    if which == "max":
        m = d_max_matrix(g)
    elif which == "min":
        m = d_min_matrix(g)
    else:
        raise ValueError(f"which must be 'max' or 'min', got {which!r}")
    edges = list(g.edges)
    for u in range(1, g.n + 1):
        for v in range(u + 1, g.n + 1):
            if not g.has_edge(u, v):
                edges.append((u, v, 1 if m[u - 1, v - 1] > 0 else -1))
    return SignedGraph(g.n, edges)


def distance_weights(g: SignedGraph, which: str = "max") -> dict[tuple[int, int], int]:
    """Signed-distance edge weights for the associated complete graph.

    Weight of pair {u, v} is the (u, v) entry of d_max or d_min; feeding
    these to the characteristic-polynomial builder reproduces the signed
    distance matrix exactly.
    """
    if which == "max":
        m = d_max_matrix(g)
    elif which == "min":
        m = d_min_matrix(g)
    else:
        raise ValueError(f"which must be 'max' or 'min', got {which!r}")
    return {
        (u, v): int(m[u - 1, v - 1])
        for u in range(1, g.n + 1)
        for v in range(u + 1, g.n + 1)
    }


def check_symmetric_zero_diagonal(m: np.ndarray) -> bool:
    return (
        m.ndim == 2
        and m.shape[0] == m.shape[1]
        and np.array_equal(m, m.T)
        and not np.any(np.diagonal(m))
    )


def matrix_to_csv(m: np.ndarray) -> str:
    return "\n".join(",".join(str(int(x)) for x in row) for row in m) + "\n"


def matrix_to_json_dict(m: np.ndarray) -> dict:
    return {"n": int(m.shape[0]), "entries": [[int(x) for x in row] for row in m]}
