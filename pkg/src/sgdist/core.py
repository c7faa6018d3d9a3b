"""Signed graphs: construction, validation, switching, negation.

A signed graph is a simple connected undirected graph whose edges carry a
sign +1 or -1.  Vertices are labeled 1..n everywhere in the public API.
Signs are plain ints in {+1, -1}; the sign of a path or cycle is the
product of its edge signs.

Instances are immutable after construction and safe to share between
threads; switching and negation return new graphs.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    DisconnectedError,
    DuplicateEdgeError,
    LoopEdgeError,
    VertexOutOfRangeError,
)


def sign_product(signs: Iterable[int]) -> int:
    """Product of a collection of +1/-1 signs (1 for the empty collection)."""
    out = 1
    for s in signs:
        out *= s
    return out


class SignedGraph:
    """Immutable simple connected undirected graph with +1/-1 edge signs.

    Parameters
    ----------
    n : int
        Number of vertices; labels are 1..n.
    edges : iterable of (u, v, sign)
        Edge list.  Orientation and order are preserved for serialization,
        but the graph itself is undirected.
    """

    __slots__ = ("n", "edges", "_sign", "_adj", "__dict__")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]]):
        if n < 1:
            raise VertexOutOfRangeError(f"vertex count must be >= 1, got {n}")
        edge_list = []
        sign_by_pair: dict[tuple[int, int], int] = {}
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
        for u, v, s in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise VertexOutOfRangeError(f"edge ({u}, {v}) outside 1..{n}")
            if u == v:
                raise LoopEdgeError(f"loop at vertex {u}")
            if s not in (1, -1):
                raise ValueError(f"edge sign must be +1 or -1, got {s!r}")
            pair = (u, v) if u < v else (v, u)
            if pair in sign_by_pair:
                raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
            sign_by_pair[pair] = s
            adj[u].append((v, s))
            adj[v].append((u, s))
            edge_list.append((u, v, s))

        self.n = n
        self.edges = tuple(edge_list)
        self._sign = sign_by_pair
        # neighbors sorted ascending so traversals are reproducible
        self._adj = tuple(tuple(sorted(nbrs)) for nbrs in adj)
        self._check_connected()

    def _check_connected(self):
        seen = [False] * (self.n + 1)
        seen[1] = True
        queue = deque([1])
        count = 1
        while queue:
            x = queue.popleft()
            for y, _ in self._adj[x]:
                if not seen[y]:
                    seen[y] = True
                    count += 1
                    queue.append(y)
        if count != self.n:
            raise DisconnectedError(
                f"graph is not connected ({count} of {self.n} vertices reachable from 1)"
            )

    # -- basic accessors -------------------------------------------------

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        """Sorted tuple of (neighbor, sign) pairs."""
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        pair = (u, v) if u < v else (v, u)
        return pair in self._sign

    def sign(self, u: int, v: int) -> int:
        """Sign of edge {u, v}; raises KeyError if absent."""
        pair = (u, v) if u < v else (v, u)
        return self._sign[pair]

    def edge_signs(self) -> dict[tuple[int, int], int]:
        """Copy of the {(u, v): sign} map with u < v."""
        return dict(self._sign)

    def _check_vertex(self, v: int):
        if not (1 <= v <= self.n):
            raise VertexOutOfRangeError(f"vertex {v} outside 1..{self.n}")

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(indptr, indices, signs) arrays over 0-based vertices, for kernels."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        for v in range(1, self.n + 1):
            indptr[v] = indptr[v - 1] + len(self._adj[v])
        indices = np.empty(2 * self.m, dtype=np.int32)
        signs = np.empty(2 * self.m, dtype=np.int8)
        k = 0
        for v in range(1, self.n + 1):
            for w, s in self._adj[v]:
                indices[k] = w - 1
                signs[k] = s
                k += 1
        return indptr, indices, signs

    # -- equality / representation ---------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self.n == other.n and self._sign == other._sign

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._sign.items())))

    def __repr__(self) -> str:
        neg = sum(1 for s in self._sign.values() if s < 0)
        return f"SignedGraph(n={self.n}, m={self.m}, negative_edges={neg})"


def switch(g: SignedGraph, zeta: Mapping[int, int] | Sequence[int]) -> SignedGraph:
    """Switch g by a vertex signing zeta: each edge sign becomes zeta(u)*sign*zeta(v).

    zeta may be a mapping {vertex: +-1} total on 1..n, or a sequence of n
    signs for vertices 1..n.  Switching preserves the sign of every cycle.
    """
    z = _as_vertex_signs(g.n, zeta)
    return SignedGraph(g.n, ((u, v, z[u] * s * z[v]) for u, v, s in g.edges))


def negate(g: SignedGraph) -> SignedGraph:
    """Flip every edge sign."""
    return SignedGraph(g.n, ((u, v, -s) for u, v, s in g.edges))


def underlying_positive(g: SignedGraph) -> SignedGraph:
    """Same underlying graph with every edge positive."""
    return SignedGraph(g.n, ((u, v, 1) for u, v, s in g.edges))


def _as_vertex_signs(n: int, zeta) -> list[int]:
    out = [0] * (n + 1)
    if isinstance(zeta, Mapping):
        for v in range(1, n + 1):
            if v not in zeta:
                raise VertexOutOfRangeError(f"switching function missing vertex {v}")
            out[v] = zeta[v]
    else:
        if len(zeta) != n:
            raise VertexOutOfRangeError(
                f"switching sequence has length {len(zeta)}, expected {n}"
            )
        out[1:] = list(zeta)
    for v in range(1, n + 1):
        if out[v] not in (1, -1):
            raise ValueError(f"switching value at vertex {v} must be +1 or -1")
    return out


def induced_subgraph(g: SignedGraph, vertices: Iterable[int]) -> tuple[SignedGraph, tuple[int, ...]]:
    """Signed subgraph induced by a vertex set, relabeled 1..k.

    Returns (subgraph, labels) where labels[i] is the original label of the
    subgraph's vertex i+1.  The induced subgraph must be connected.
    """
    labels = tuple(sorted(set(vertices)))
    index = {v: i + 1 for i, v in enumerate(labels)}
    for v in labels:
        g._check_vertex(v)
    edges = [
        (index[u], index[v], s)
        for u, v, s in g.edges
        if u in index and v in index
    ]
    return SignedGraph(len(labels), edges), labels


def bipartition(g: SignedGraph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """2-coloring of the underlying graph, or None if an odd cycle exists."""
    color = [0] * (g.n + 1)
    color[1] = 1
    queue = deque([1])
    while queue:
        x = queue.popleft()
        for y, _ in g.neighbors(x):
            if color[y] == 0:
                color[y] = -color[x]
                queue.append(y)
            elif color[y] == color[x]:
                return None
    side1 = tuple(v for v in g.vertices() if color[v] == 1)
    side2 = tuple(v for v in g.vertices() if color[v] == -1)
    return side1, side2


def is_bipartite(g: SignedGraph) -> bool:
    return bipartition(g) is not None
