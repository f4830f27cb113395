from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given

from conftest import bowtie, graphs, to_nx
from ipdkit import generators
from ipdkit.errors import PreconditionError
from ipdkit.graph import Graph, components, induced_subgraph
from ipdkit.structure import (
    block_decomposition,
    find_claw,
    is_bad,
    is_claw_free,
    is_odd_complete,
    leaf_blocks,
)


def test_block_examples():
    d = block_decomposition(bowtie())
    assert sorted(map(sorted, d.blocks)) == [[0, 1, 2], [2, 3, 4]]
    assert d.cut_vertices == frozenset({2})
    p4 = block_decomposition(generators.path(4))
    assert len(p4.blocks) == 3 and p4.cut_vertices == frozenset({1, 2})
    k5 = block_decomposition(generators.complete(5))
    assert len(k5.blocks) == 1 and not k5.cut_vertices


def test_isolated_vertices_are_singleton_blocks():
    d = block_decomposition(Graph.from_edges(3, [(0, 1)]))
    assert frozenset({2}) in d.blocks
    assert block_decomposition(Graph.from_edges(1, [])).blocks == (frozenset({0}),)


def test_leaf_blocks():
    d = block_decomposition(generators.path(4))
    leaves = {d.blocks[i] for i in leaf_blocks(d)}
    assert leaves == {frozenset({0, 1}), frozenset({2, 3})}
    k5 = block_decomposition(generators.complete(5))
    assert leaf_blocks(k5) == [0]


@given(graphs(max_n=9))
def test_blocks_match_networkx(g):
    d = block_decomposition(g)
    h = to_nx(g)
    ours = sorted(sorted(e) for e in d.edges if e)
    theirs = sorted(sorted(tuple(sorted(x)) for x in comp) for comp in nx.biconnected_component_edges(h))
    assert ours == theirs
    all_edges = [e for es in d.edges for e in es]
    assert sorted(all_edges) == g.edges()  # union is E(g), pairwise disjoint
    assert d.cut_vertices == frozenset(nx.articulation_points(h))


@given(graphs(max_n=9))
def test_cut_vertices_change_component_count(g):
    d = block_decomposition(g)
    base = len(components(g))
    for v in range(g.n):
        rest = [u for u in range(g.n) if u != v]
        after = len(components(induced_subgraph(g, rest)[0]))
        isolated = not g.masks[v]
        if v in d.cut_vertices:
            assert after > base
        else:
            assert after == base - (1 if isolated else 0)


@given(graphs(max_n=9))
def test_blocks_share_only_cut_vertices(g):
    d = block_decomposition(g)
    for a, b in combinations(d.blocks, 2):
        shared = a & b
        assert len(shared) <= 1 and shared <= d.cut_vertices


def test_odd_complete_and_bad_examples():
    assert is_odd_complete(generators.complete(1)) and is_odd_complete(generators.complete(5))
    assert not is_odd_complete(generators.complete(4)) and not is_odd_complete(generators.cycle(5))
    assert is_bad(bowtie())
    assert is_bad(Graph.from_edges(1, []))
    assert not is_bad(generators.path(2))
    with pytest.raises(PreconditionError):
        is_bad(Graph.from_edges(2, []))
    with pytest.raises(PreconditionError):
        is_bad(Graph.from_edges(0, []))


@given(graphs(min_n=1, max_n=9, connected=True))
def test_bad_iff_every_block_odd_complete(g):
    d = block_decomposition(g)
    expect = all(is_odd_complete(induced_subgraph(g, b)[0]) for b in d.blocks)
    assert is_bad(g) == expect
    # independent view through networkx: blocks are the biconnected components (or K1)
    h = to_nx(g)
    comps = list(nx.biconnected_components(h)) or [set(h.nodes)]
    nx_bad = all(len(c) % 2 == 1 and h.subgraph(c).number_of_edges() == len(c) * (len(c) - 1) // 2 for c in comps)
    assert is_bad(g) == nx_bad


def test_claw_examples():
    claw = generators.complete_bipartite(1, 3)
    w = find_claw(claw)
    assert w.center == 0 and w.leaves == (1, 2, 3)
    assert find_claw(generators.complete(3)) is None
    star = generators.complete_bipartite(1, 4)
    assert find_claw(star).leaves == (1, 2, 3)


def _claw_brute(g: Graph) -> bool:
    for c in range(g.n):
        for trio in combinations(range(g.n), 3):
            if c in trio:
                continue
            if all(g.has_edge(c, x) for x in trio) and not any(g.has_edge(a, b) for a, b in combinations(trio, 2)):
                return True
    return False


@given(graphs(max_n=9))
def test_claw_search_matches_brute_force(g):
    w = find_claw(g)
    assert (w is not None) == _claw_brute(g)
    assert is_claw_free(g) == (w is None)
    if w is not None:
        assert all(g.has_edge(w.center, x) for x in w.leaves)
        assert not any(g.has_edge(a, b) for a, b in combinations(w.leaves, 2))


@given(graphs(max_n=7))
def test_line_graphs_are_claw_free(g):
    lg = nx.line_graph(to_nx(g))
    h = nx.convert_node_labels_to_integers(lg)
    assert is_claw_free(Graph.from_edges(h.number_of_nodes(), h.edges()))
