"""Shortest-path sign analysis.

For vertices u, v of a signed graph the hop distance d(u, v) is refined by
two signs: the best sign over all shortest uv-paths (+1 unless every
shortest path is negative) and the worst sign (-1 unless every shortest
path is positive).  A pair is compatible when the two signs agree, i.e.
all shortest paths between them carry one sign; the graph is compatible
when every pair is.

sign_bfs is the exact reference implementation (arbitrary-precision path
counts); whole-graph queries go through the compiled kernels.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .core import SignedGraph
from .errors import PathExplosionError


@dataclass(frozen=True)
class SignReachTable:
    """Per-source BFS result.

    Entries are indexed by vertex label; index 0 is an unused sentinel.
    plus_reach[v] / minus_reach[v] say whether some shortest source-v path
    is positive / negative.  path_count[v] is the exact number of shortest
    source-v paths (Python ints, no overflow).
    """

    source: int
    dist: tuple[int, ...]
    plus_reach: tuple[bool, ...]
    minus_reach: tuple[bool, ...]
    path_count: tuple[int, ...]


@dataclass(frozen=True)
class PairDistance:
    """Signed distance data for one vertex pair.

    d_max = sigma_max * d and d_min = sigma_min * d, where sigma_max is -1
    only if all shortest paths are negative and sigma_min is +1 only if all
    are positive.
    """

    u: int
    v: int
    d: int
    sigma_max: int
    sigma_min: int
    d_max: int
    d_min: int

    @property
    def compatible(self) -> bool:
        return self.sigma_max == self.sigma_min


def sign_bfs(g: SignedGraph, source: int) -> SignReachTable:
    """BFS layering plus sign-set and path-count propagation.

    A sign s reaches v iff some predecessor x of v in the shortest-path DAG
    has s*sigma(xv) reaching x; counts sum over DAG predecessors.  The BFS
    queue pops vertices in layer order, so each vertex is fully settled
    before it pops.
    """
    g._check_vertex(source)
    n = g.n
    dist = [-1] * (n + 1)
    plus = [False] * (n + 1)
    minus = [False] * (n + 1)
    count = [0] * (n + 1)
    dist[source] = 0
    plus[source] = True
    count[source] = 1
    queue = deque([source])
    while queue:
        x = queue.popleft()
        dx = dist[x]
        for y, s in g.neighbors(x):
            if dist[y] < 0:
                dist[y] = dx + 1
                queue.append(y)
            if dist[y] == dx + 1:
                if s > 0:
                    plus[y] |= plus[x]
                    minus[y] |= minus[x]
                else:
                    plus[y] |= minus[x]
                    minus[y] |= plus[x]
                count[y] += count[x]
    return SignReachTable(
        source, tuple(dist), tuple(plus), tuple(minus), tuple(count)
    )


@lru_cache(maxsize=256)
def all_pairs_reach(g: SignedGraph):
    """(dist, plus, minus, counts) n-by-n arrays for all sources, 0-based.

    Backed by the active kernel backend; counts saturate at
    kernels.PATH_COUNT_CAP (still exact for ==1 tests).
    """
    indptr, indices, signs = g.csr
    return kernels.reach_all(g.n, indptr, indices, signs)


def pair_distance(g: SignedGraph, u: int, v: int) -> PairDistance:
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        return PairDistance(u, v, 0, 1, 1, 0, 0)
    t = sign_bfs(g, u)
    d = t.dist[v]
    sigma_max = 1 if t.plus_reach[v] else -1
    sigma_min = -1 if t.minus_reach[v] else 1
    return PairDistance(u, v, d, sigma_max, sigma_min, sigma_max * d, sigma_min * d)


def compatible_pair(g: SignedGraph, u: int, v: int) -> bool:
    """True iff all shortest uv-paths have one common sign."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        return True
    t = sign_bfs(g, u)
    return not (t.plus_reach[v] and t.minus_reach[v])


def incompatible_pairs(g: SignedGraph) -> list[tuple[int, int]]:
    """All incompatible pairs (u, v) with u < v, in row-major order."""
    _, plus, minus, _ = all_pairs_reach(g)
    both = np.triu(plus & minus, k=1)
    return [(int(u) + 1, int(v) + 1) for u, v in np.argwhere(both)]


def is_compatible(g: SignedGraph) -> bool:
    _, plus, minus, _ = all_pairs_reach(g)
    return not bool(np.any(plus & minus))


def is_geodetic(g: SignedGraph) -> bool:
    """True iff every vertex pair has a unique shortest path (signs ignored)."""
    _, _, _, counts = all_pairs_reach(g)
    return bool(np.all(counts == 1))


def diameter(g: SignedGraph) -> int:
    dist, _, _, _ = all_pairs_reach(g)
    return int(dist.max())


def enumerate_shortest_paths(
    g: SignedGraph, u: int, v: int, max_paths: int = 10**6
) -> list[tuple[tuple[int, ...], int]]:
    """All shortest u-v paths with their signs, by DFS over the DAG.

    Paths come out in lexicographic vertex order.  Intended as a small-graph
    oracle; raises PathExplosionError beyond max_paths.
    """
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        return [((u,), 1)]
    t = sign_bfs(g, u)
    target = t.dist[v]
    out: list[tuple[tuple[int, ...], int]] = []
    # walk forward from u along edges that step one BFS layer toward v;
    # pruning with dist keeps the search inside the u->v DAG only
    back = sign_bfs(g, v)
    path = [u]

    def walk(x: int, sign: int):
        if x == v:
            out.append((tuple(path), sign))
            if len(out) > max_paths:
                raise PathExplosionError(
                    f"more than {max_paths} shortest paths between {u} and {v}"
                )
            return
        dx = t.dist[x]
        for y, s in g.neighbors(x):
            if t.dist[y] == dx + 1 and back.dist[y] == target - dx - 1:
                path.append(y)
                walk(y, sign * s)
                path.pop()

    walk(u, 1)
    return out
