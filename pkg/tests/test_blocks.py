import pytest

import sgdist as sg

from corpus import cutpoint_corpus


def test_path_blocks():
    g = sg.path_graph(3)
    dec = sg.block_decomposition(g)
    assert dec.blocks == ((1, 2), (2, 3))
    assert dec.cutpoints == (2,)


def test_two_triangles_share_vertex():
    g = sg.SignedGraph(
        5, [(1, 2, 1), (2, 3, -1), (1, 3, 1), (3, 4, 1), (4, 5, 1), (3, 5, -1)]
    )
    dec = sg.block_decomposition(g)
    assert dec.blocks == ((1, 2, 3), (3, 4, 5))
    assert dec.cutpoints == (3,)


def test_two_connected_single_block():
    g = sg.positive_cycle(5)
    dec = sg.block_decomposition(g)
    assert dec.blocks == (tuple(range(1, 6)),)
    assert dec.cutpoints == ()


def test_single_vertex():
    g = sg.SignedGraph(1, [])
    dec = sg.block_decomposition(g)
    assert dec.blocks == ((1,),)
    assert dec.cutpoints == ()


def test_single_edge():
    g = sg.SignedGraph(2, [(1, 2, -1)])
    dec = sg.block_decomposition(g)
    assert dec.blocks == ((1, 2),) and dec.cutpoints == ()


def test_lollipop():
    # triangle 1-2-3 with a tail 3-4-5
    g = sg.SignedGraph(5, [(1, 2, 1), (2, 3, 1), (1, 3, 1), (3, 4, 1), (4, 5, 1)])
    dec = sg.block_decomposition(g)
    assert dec.blocks == ((1, 2, 3), (3, 4), (4, 5))
    assert dec.cutpoints == (3, 4)


def test_block_subgraphs_relabel_and_sign():
    g = sg.SignedGraph(
        5, [(1, 2, 1), (2, 3, -1), (1, 3, 1), (3, 4, 1), (4, 5, 1), (3, 5, -1)]
    )
    pieces = list(sg.block_subgraphs(g))
    assert len(pieces) == 2
    sub, labels = pieces[1]
    assert labels == (3, 4, 5)
    # original sign of {3,5} survives relabelling to {1,3}
    assert sub.sign(1, 3) == -1


def _blocks_cover_all_edges(g):
    dec = sg.block_decomposition(g)
    covered = set()
    for blk in dec.blocks:
        members = set(blk)
        for u, v, _ in g.edges:
            if u in members and v in members:
                covered.add((min(u, v), max(u, v)))
    return covered == {(min(u, v), max(u, v)) for u, v, _ in g.edges}


def test_edge_coverage_on_random_corpus():
    for g in cutpoint_corpus(60, seed=424242):
        dec = sg.block_decomposition(g)
        assert _blocks_cover_all_edges(g)
        # every cutpoint appears in at least two blocks
        for c in dec.cutpoints:
            assert sum(c in blk for blk in dec.blocks) >= 2
        # non-cutpoints appear in exactly one block
        cps = set(dec.cutpoints)
        for v in g.vertices():
            if v not in cps:
                assert sum(v in blk for blk in dec.blocks) == 1


def test_block_subgraph_must_be_connected_piece():
    g = sg.path_graph(4)
    with pytest.raises(sg.DisconnectedError):
        sg.induced_subgraph(g, [1, 4])
