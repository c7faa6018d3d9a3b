"""Exact characteristic polynomials of weighted signed graphs by
elementary-subgraph enumeration.

An elementary subgraph is a vertex-disjoint union of single edges and
cycles.  With kap components and c cycles, a k-vertex elementary subgraph
contributes (-1)^kap * 2^c * (product of cycle-edge weights) * (product of
squared single-edge weights) to the coefficient of lambda^(n-k).  All
arithmetic is exact Python integers; distance weights up to the diameter
inflate products well past 64 bits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import SignedGraph
from .errors import TooLargeError

MAX_ORDER = 12


@dataclass(frozen=True)
class CharPoly:
    """Monic integer polynomial; coeffs[j] multiplies lambda^(degree-j)."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def to_json_dict(self) -> dict:
        return {"coeffs": list(self.coeffs)}


def sachs_charpoly(
    g: SignedGraph, weights: Mapping[tuple[int, int], int] | None = None
) -> CharPoly:
    """Characteristic polynomial of the weighted adjacency matrix of g.

    weights maps unordered pairs to nonzero integers; default is the edge
    signs, which yields the signed adjacency charpoly.  Enumeration is
    exponential, hence the hard cap n <= 12.
    """
    n = g.n
    if n > MAX_ORDER:
        raise TooLargeError(f"enumeration capped at n <= {MAX_ORDER}, got {n}")

    w: dict[tuple[int, int], int] = {}
    if weights is None:
        w = g.edge_signs()
    else:
        for (u, v), value in weights.items():
            value = int(value)
            if value == 0:
                raise ValueError(f"zero weight on pair ({u}, {v})")
            w[(u, v) if u < v else (v, u)] = value
        for pair in g.edge_signs():
            if pair not in w:
                raise ValueError(f"missing weight for edge {pair}")

    adj = [()] + [tuple(y for y, _ in g.neighbors(v)) for v in range(1, n + 1)]
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    used = [False] * (n + 1)

    def weight_of(a: int, b: int) -> int:
        return w[(a, b) if a < b else (b, a)]

    def record(k: int, kap: int, cyc: int, prod: int):
        coeffs[k] += (-1 if kap % 2 else 1) * (1 << cyc) * prod

    def extend(start: int, k: int, kap: int, cyc: int, prod: int):
        v = start
        while v <= n and used[v]:
            v += 1
        if v > n:
            return
        # v stays outside the subgraph
        extend(v + 1, k, kap, cyc, prod)
        used[v] = True
        # v becomes one endpoint of an isolated edge; partners below v are
        # already decided, so each edge is tried once
        for y in adj[v]:
            if y > v and not used[y]:
                used[y] = True
                wy = weight_of(v, y)
                record(k + 2, kap + 1, cyc, prod * wy * wy)
                extend(v + 1, k + 2, kap + 1, cyc, prod * wy * wy)
                used[y] = False
        # v becomes the least vertex of a cycle; orientation deduplicated by
        # requiring second vertex < last vertex.  path is local to this
        # frame: the nested extend below starts disjoint cycles of its own
        path = [v]

        def grow(x: int, pprod: int):
            for y in adj[x]:
                if y == v:
                    if len(path) >= 3 and path[1] < x:
                        total = prod * pprod * weight_of(x, v)
                        record(k + len(path), kap + 1, cyc + 1, total)
                        extend(v + 1, k + len(path), kap + 1, cyc + 1, total)
                elif y > v and not used[y]:
                    used[y] = True
                    path.append(y)
                    grow(y, pprod * weight_of(x, y))
                    path.pop()
                    used[y] = False

        grow(v, 1)
        used[v] = False

    extend(1, 0, 0, 0, 1)
    return CharPoly(tuple(coeffs))


def charpoly_of_matrix(m) -> CharPoly:
    """Exact charpoly of an integer symmetric matrix by the
    Faddeev-LeVerrier recurrence (test oracle for the enumeration)."""
    from fractions import Fraction

    n = len(m)
    a = [[Fraction(int(m[i][j])) for j in range(n)] for i in range(n)]

    def matmul(x, y):
        return [
            [sum(x[i][t] * y[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]

    coeffs = [Fraction(1)]
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        for i in range(n):
            mk[i][i] += coeffs[-1]
        mk = matmul(a, mk)
        ck = -sum(mk[i][i] for i in range(n)) / k
        coeffs.append(ck)
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ValueError("non-integer charpoly coefficient")
        out.append(int(c))
    return CharPoly(tuple(out))
