"""Generators for the signed-graph families used throughout the package.

Canonical placements keep fixtures stable: the lone negative edge of an
unbalanced cycle is {n, 1}, and a wheel's hub is vertex n+1.
"""

from __future__ import annotations

from itertools import combinations

from .blocks import block_decomposition
from .core import SignedGraph, is_bipartite
from .errors import BadFamilyParamError


def positive_cycle(n: int) -> SignedGraph:
    """All-positive cycle 1-2-...-n-1."""
    if n < 3:
        raise BadFamilyParamError(f"cycle needs n >= 3, got {n}")
    edges = [(i, i + 1, 1) for i in range(1, n)]
    edges.append((n, 1, 1))
    return SignedGraph(n, edges)


def unbalanced_cycle(n: int) -> SignedGraph:
    """Odd cycle 1-2-...-n-1 with exactly the closing edge {n, 1} negative."""
    if n < 3 or n % 2 == 0:
        raise BadFamilyParamError(f"unbalanced cycle needs odd n >= 3, got {n}")
    edges = [(i, i + 1, 1) for i in range(1, n)]
    edges.append((n, 1, -1))
    return SignedGraph(n, edges)


def neg_rim_wheel(n: int) -> SignedGraph:
    """Wheel on n+1 vertices: negative rim cycle 1..n, hub n+1, positive spokes."""
    if n < 3 or n % 2 == 0:
        raise BadFamilyParamError(f"wheel rim needs odd n >= 3, got {n}")
    edges = [(i, i + 1, -1) for i in range(1, n)]
    edges.append((n, 1, -1))
    edges.extend((i, n + 1, 1) for i in range(1, n + 1))
    return SignedGraph(n + 1, edges)


def complete_bipartite(p: int, q: int) -> SignedGraph:
    """All-positive K_{p,q} with parts 1..p and p+1..p+q."""
    if p < 1 or q < 1:
        raise BadFamilyParamError(f"complete bipartite needs p,q >= 1, got {p},{q}")
    edges = [(u, p + v, 1) for u in range(1, p + 1) for v in range(1, q + 1)]
    return SignedGraph(p + q, edges)


def complete_graph(n: int) -> SignedGraph:
    """All-positive K_n."""
    if n < 2:
        raise BadFamilyParamError(f"complete graph needs n >= 2, got {n}")
    return SignedGraph(n, ((u, v, 1) for u, v in combinations(range(1, n + 1), 2)))


def path_graph(n: int) -> SignedGraph:
    """All-positive path 1-2-...-n."""
    if n < 1:
        raise BadFamilyParamError(f"path needs n >= 1, got {n}")
    return SignedGraph(n, ((i, i + 1, 1) for i in range(1, n)))


def kneser_graph(m: int, k: int) -> SignedGraph:
    """All-positive Kneser graph: k-subsets of {1..m}, adjacent when disjoint.

    kneser_graph(5, 2) is the Petersen graph, i.e. the complement of the
    line graph of K5.
    """
    if k < 1 or m < 2 * k + 1:
        # m = 2k gives a perfect matching (disconnected); smaller m is edgeless
        raise BadFamilyParamError(f"kneser graph needs m >= 2k+1 >= 3, got m={m}, k={k}")
    subsets = list(combinations(range(1, m + 1), k))
    edges = []
    for i, a in enumerate(subsets):
        sa = set(a)
        for j in range(i + 1, len(subsets)):
            if sa.isdisjoint(subsets[j]):
                edges.append((i + 1, j + 1, 1))
    return SignedGraph(len(subsets), edges)


def _is_two_connected(g: SignedGraph) -> bool:
    if g.n < 3:
        return False
    dec = block_decomposition(g)
    return len(dec.blocks) == 1 and not dec.cutpoints


def _is_complete(g: SignedGraph) -> bool:
    return 2 * g.m == g.n * (g.n - 1)


def signed_join(part_a: SignedGraph, part_b: SignedGraph) -> SignedGraph:
    """Join of two graphs with a rigid sign pattern: first part all-positive,
    second part all-negative, every cross edge positive.

    Both parts must be 2-connected, incomplete, and non-bipartite (their
    input signs are ignored; only structure is used).  The result is an
    unbalanced, non-antibalanced, non-geodetic graph of diameter 2 whose
    two signed distance matrices nevertheless coincide.
    """
    for name, part in (("first", part_a), ("second", part_b)):
        if not _is_two_connected(part):
            raise BadFamilyParamError(f"{name} part must be 2-connected")
        if _is_complete(part):
            raise BadFamilyParamError(f"{name} part must be incomplete")
        if is_bipartite(part):
            raise BadFamilyParamError(f"{name} part must not be bipartite")
    p = part_a.n
    edges = [(u, v, 1) for u, v, _ in part_a.edges]
    edges.extend((u + p, v + p, -1) for u, v, _ in part_b.edges)
    edges.extend((u, p + v, 1) for u in range(1, p + 1) for v in range(1, part_b.n + 1))
    return SignedGraph(p + part_b.n, edges)


_FAMILIES = {
    "unbalanced_cycle": lambda n: unbalanced_cycle(n),
    "neg_rim_wheel": lambda n: neg_rim_wheel(n),
    "complete_bipartite": lambda p, q: complete_bipartite(p, q),
    "signed_join": lambda part_a, part_b: signed_join(part_a, part_b),
}


def gen_family(name: str, **params) -> SignedGraph:
    """Dispatch a family by name; raises BadFamilyParamError for unknown names."""
    try:
        builder = _FAMILIES[name]
    except KeyError:
        raise BadFamilyParamError(f"unknown family {name!r}") from None
    try:
        return builder(**params)
    except TypeError as exc:
        raise BadFamilyParamError(str(exc)) from None
