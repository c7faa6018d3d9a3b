"""Balance, antibalance, spectral balance criteria, and the three-way
classification of signed graphs.

A signed graph is balanced when every cycle is positive; equivalently it
can be switched all-positive, and equivalently its vertices split into two
parts with positive edges inside parts and negative edges across.
Detection is combinatorial (spanning-tree switching, O(n+m)); the spectral
criteria are verification paths, never the decision procedure, since
floating-point cospectrality is tolerance-bound.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import SignedGraph, negate, sign_product, underlying_positive
from .distance import is_compatible, is_geodetic
from .matrices import (
    adjacency_matrix,
    associated_complete,
    d_max_matrix,
    d_min_matrix,
    unsigned_distance_matrix,
)
from .spectra import Spectrum, eig_sym, spectra_close

SPECTRAL_TOL = 1e-6


@dataclass(frozen=True)
class BalanceReport:
    """Outcome of balance detection.

    Balanced graphs carry the two-part vertex split (second part may be
    empty); unbalanced graphs carry a negative cycle as a closed vertex
    sequence (first vertex implicitly follows the last).
    """

    balanced: bool
    bipartition: tuple[tuple[int, ...], tuple[int, ...]] | None
    witness: tuple[int, ...] | None


def _spanning_tree_signing(g: SignedGraph):
    """BFS tree from vertex 1; zeta(v) = sign of the tree path to v.

    Returns (zeta, parent, non-tree edges in first-encounter order).
    """
    n = g.n
    zeta = [0] * (n + 1)
    parent = [0] * (n + 1)
    zeta[1] = 1
    order = deque([1])
    non_tree: list[tuple[int, int]] = []
    seen_non_tree = set()
    while order:
        x = order.popleft()
        for y, s in g.neighbors(x):
            if zeta[y] == 0:
                zeta[y] = zeta[x] * s
                parent[y] = x
                order.append(y)
            elif y != parent[x]:
                key = (x, y) if x < y else (y, x)
                if key not in seen_non_tree:
                    seen_non_tree.add(key)
                    non_tree.append((x, y))
    return zeta, parent, non_tree


def _tree_cycle(parent, x: int, y: int) -> tuple[int, ...]:
    """Fundamental cycle of non-tree edge {x, y}: tree path x..y plus the edge."""
    up_x = [x]
    while parent[up_x[-1]]:
        up_x.append(parent[up_x[-1]])
    anc_x = {v: i for i, v in enumerate(up_x)}
    up_y = [y]
    while up_y[-1] not in anc_x:
        up_y.append(parent[up_y[-1]])
    lca = up_y[-1]
    return tuple(up_x[: anc_x[lca] + 1] + up_y[-2::-1])


def is_balanced(g: SignedGraph) -> BalanceReport:
    """Spanning-tree switching: switch all tree edges positive, then the
    graph is balanced iff every non-tree edge also became positive.  The
    witness is the fundamental cycle of the first failing non-tree edge in
    BFS encounter order.
    """
    zeta, parent, non_tree = _spanning_tree_signing(g)
    for x, y in non_tree:
        if zeta[x] * g.sign(x, y) * zeta[y] < 0:
            cycle = _tree_cycle(parent, x, y)
            edge_signs = [
                g.sign(cycle[i], cycle[(i + 1) % len(cycle)])
                for i in range(len(cycle))
            ]
            assert sign_product(edge_signs) == -1
            return BalanceReport(balanced=False, bipartition=None, witness=cycle)
    side1 = tuple(v for v in g.vertices() if zeta[v] > 0)
    side2 = tuple(v for v in g.vertices() if zeta[v] < 0)
    return BalanceReport(balanced=True, bipartition=(side1, side2), witness=None)


def is_antibalanced(g: SignedGraph) -> bool:
    """True iff the edge-negated graph is balanced (equivalently: even
    cycles positive, odd cycles negative)."""
    return is_balanced(negate(g)).balanced


def balance_via_associated_complete(g: SignedGraph, which: str) -> bool:
    """Balance read off the associated signed complete graph; agrees with
    is_balanced on every input."""
    return is_balanced(associated_complete(g, which)).balanced


def balance_spectral_distance(g: SignedGraph, mode: str) -> bool:
    """Distance-spectral balance criteria.

    cospectral_max / cospectral_min: the signed distance matrix is
    cospectral with the unsigned one.  largest_max / largest_min: only the
    largest eigenvalues are compared.  All four agree with is_balanced.
    """
    unsigned = eig_sym(unsigned_distance_matrix(g))
    if mode in ("cospectral_max", "largest_max"):
        signed = eig_sym(d_max_matrix(g))
    elif mode in ("cospectral_min", "largest_min"):
        signed = eig_sym(d_min_matrix(g))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if mode.startswith("cospectral"):
        return spectra_close(signed, unsigned, SPECTRAL_TOL)
    return abs(signed.largest - unsigned.largest) <= SPECTRAL_TOL


def balance_spectral_adjacency(g: SignedGraph, mode: str) -> bool:
    """Adjacency-spectral balance criteria against the all-positive
    underlying graph: full cospectrality or largest-eigenvalue equality."""
    signed = eig_sym(adjacency_matrix(g))
    unsigned = eig_sym(adjacency_matrix(underlying_positive(g)))
    if mode == "cospectral":
        return spectra_close(signed, unsigned, SPECTRAL_TOL)
    if mode == "largest":
        return abs(signed.largest - unsigned.largest) <= SPECTRAL_TOL
    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class ClassLabel:
    """Taxonomy: I = balanced or antibalanced or geodetic (all force the
    two signed distance matrices to coincide); II = neither, but the
    matrices still coincide; III = the matrices differ."""

    label: str
    reasons: frozenset[str]


def classify(g: SignedGraph) -> ClassLabel:
    """Compute all flags (no short-circuiting) so reports are complete."""
    reasons = set()
    if is_balanced(g).balanced:
        reasons.add("balanced")
    if is_antibalanced(g):
        reasons.add("antibalanced")
    if is_geodetic(g):
        reasons.add("geodetic")
    if reasons:
        label = "I"
    elif is_compatible(g):
        label = "II"
    else:
        label = "III"
    return ClassLabel(label=label, reasons=frozenset(reasons))
