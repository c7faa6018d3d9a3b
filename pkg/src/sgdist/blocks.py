"""Block decomposition (biconnected components) and cutpoints.

Blocks are maximal 2-connected subgraphs or bridge edges; two blocks share
at most one vertex, which is then a cutpoint.  Every edge lies in exactly
one block.  Uses the usual DFS low-link method, iteratively so deep graphs
do not hit the recursion limit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import SignedGraph, induced_subgraph


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks as sorted vertex tuples, ordered by smallest contained vertex."""

    blocks: tuple[tuple[int, ...], ...]
    cutpoints: tuple[int, ...]


def block_decomposition(g: SignedGraph) -> BlockDecomposition:
    n = g.n
    if n == 1:
        return BlockDecomposition(blocks=((1,),), cutpoints=())

    adj = [()] + [tuple(w for w, _ in g.neighbors(v)) for v in range(1, n + 1)]
    disc = [0] * (n + 1)
    low = [0] * (n + 1)
    parent = [0] * (n + 1)
    edge_stack: list[tuple[int, int]] = []
    raw_blocks: list[tuple[int, ...]] = []
    cutpoints: set[int] = set()

    root = 1
    timer = 1
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    # (vertex, index of next neighbor to scan)
    stack: list[list[int]] = [[root, 0]]
    while stack:
        v, i = stack[-1]
        if i < len(adj[v]):
            stack[-1][1] = i + 1
            w = adj[v][i]
            if disc[w] == 0:
                parent[w] = v
                if v == root:
                    root_children += 1
                edge_stack.append((v, w))
                disc[w] = low[w] = timer
                timer += 1
                stack.append([w, 0])
            elif w != parent[v] and disc[w] < disc[v]:
                edge_stack.append((v, w))
                if disc[w] < low[v]:
                    low[v] = disc[w]
        else:
            stack.pop()
            if not stack:
                continue
            u = stack[-1][0]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= disc[u]:
                # the tree edge (u, v) closes a block
                verts: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    verts.add(a)
                    verts.add(b)
                    if (a, b) == (u, v):
                        break
                raw_blocks.append(tuple(sorted(verts)))
                if u != root:
                    cutpoints.add(u)
    if root_children >= 2:
        cutpoints.add(root)

    raw_blocks.sort()
    return BlockDecomposition(blocks=tuple(raw_blocks), cutpoints=tuple(sorted(cutpoints)))


def block_subgraphs(g: SignedGraph):
    """Induced signed subgraph for each block, with its original labels.

    Yields (subgraph, labels) pairs in block order.  A block is an induced
    subgraph of g, so no edges are lost.
    """
    for blk in block_decomposition(g).blocks:
        yield induced_subgraph(g, blk)
