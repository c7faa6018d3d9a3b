"""Shared graph corpora for the test suite.

Connected graphs on up to six vertices are enumerated once per session, up
to isomorphism: the canonical form of a graph is the smallest edge bitmask
over all vertex permutations, computed vectorized with numpy.  Counts per
order are 1, 1, 2, 6, 21, 112.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from sgdist import DisconnectedError, SignedGraph, block_decomposition, is_bipartite

SWEEP_SEED = 20260815
SIGNATURES_PER_GRAPH = 50


def _connected_masks(n: int, pairs) -> list[int]:
    masks = []
    for mask in range(1 << len(pairs)):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        merged = n
        bits = mask
        j = 0
        while bits:
            if bits & 1:
                ra, rb = find(pairs[j][0]), find(pairs[j][1])
                if ra != rb:
                    parent[ra] = rb
                    merged -= 1
            bits >>= 1
            j += 1
        if merged == 1:
            masks.append(mask)
    return masks


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Connected graphs on vertices 1..n up to isomorphism, as edge tuples."""
    if n == 1:
        return ((),)
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    pair_idx = {p: i for i, p in enumerate(pairs)}
    masks = np.array(_connected_masks(n, pairs), dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(m)[None, :]) & 1).astype(np.int64)

    weights = (np.int64(1) << np.arange(m, dtype=np.int64))
    canon = masks.copy()
    for perm in permutations(range(n)):
        moved = np.empty(m, dtype=np.int64)
        for j, (a, b) in enumerate(pairs):
            x, y = perm[a], perm[b]
            moved[j] = pair_idx[(x, y) if x < y else (y, x)]
        np.minimum(canon, bits @ weights[moved], out=canon)

    out = []
    for mask in sorted(set(int(x) for x in canon)):
        out.append(
            tuple((a + 1, b + 1) for j, (a, b) in enumerate(pairs) if mask >> j & 1)
        )
    return tuple(out)


def all_connected_graphs(max_n: int = 6, min_n: int = 1):
    """(n, edges) for every connected graph with min_n <= n <= max_n."""
    out = []
    for n in range(min_n, max_n + 1):
        out.extend((n, edges) for edges in connected_graphs(n))
    return out


@lru_cache(maxsize=None)
def sweep_corpus() -> tuple[SignedGraph, ...]:
    """Every connected underlying graph with n <= 6, each with 50 seeded
    random signatures."""
    rng = np.random.default_rng(SWEEP_SEED)
    out = []
    for n, edges in all_connected_graphs():
        for _ in range(SIGNATURES_PER_GRAPH):
            signs = 1 - 2 * rng.integers(0, 2, size=len(edges))
            out.append(
                SignedGraph(n, [(u, v, int(s)) for (u, v), s in zip(edges, signs)])
            )
    return tuple(out)


@lru_cache(maxsize=None)
def bipartite_exhaustive() -> tuple[SignedGraph, ...]:
    """All signatures of all connected bipartite graphs with n <= 6."""
    out = []
    for n, edges in all_connected_graphs():
        if not is_bipartite(SignedGraph(n, [(u, v, 1) for u, v in edges])):
            continue
        for smask in range(1 << len(edges)):
            out.append(
                SignedGraph(
                    n,
                    [
                        (u, v, -1 if smask >> j & 1 else 1)
                        for j, (u, v) in enumerate(edges)
                    ],
                )
            )
    return tuple(out)


def random_connected_signed(rng, n: int, p: float = 0.4) -> SignedGraph:
    while True:
        edges = []
        for u in range(1, n + 1):
            for v in range(u + 1, n + 1):
                if rng.random() < p:
                    edges.append((u, v, 1 if rng.random() < 0.5 else -1))
        try:
            return SignedGraph(n, edges)
        except DisconnectedError:
            continue


@lru_cache(maxsize=None)
def cutpoint_corpus(count: int = 200, seed: int = 7_1828) -> tuple[SignedGraph, ...]:
    """Seeded random connected graphs with n <= 8 that contain a cutpoint."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        n = int(rng.integers(4, 9))
        g = random_connected_signed(rng, n, p=0.3)
        if block_decomposition(g).cutpoints:
            out.append(g)
    return tuple(out)


@lru_cache(maxsize=None)
def order7_corpus(count: int = 150, seed: int = 3_1415) -> tuple[SignedGraph, ...]:
    """Seeded random signed graphs on exactly 7 vertices."""
    rng = np.random.default_rng(seed)
    return tuple(random_connected_signed(rng, 7, p=0.4) for _ in range(count))
