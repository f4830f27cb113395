from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs, to_nx
from ipdkit import generators
from ipdkit.errors import CapExceeded, ParameterError
from ipdkit.graph import (
    Graph,
    bipartition,
    components,
    find_hamiltonian_cycle,
    induced_subgraph,
    is_connected,
    is_cycle,
    regular_degree,
)


def test_graph_rejects_bad_adjacency():
    with pytest.raises(ParameterError):
        Graph.from_masks([0b10, 0b00])  # asymmetric
    with pytest.raises(ParameterError):
        Graph.from_masks([0b1])  # self-loop
    with pytest.raises(ParameterError):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(ParameterError):
        Graph.from_adjacency([[1], [0, 5]])


def test_adjacency_views_agree():
    g = Graph.from_adjacency([[1, 2], [0], [0]])
    assert g.adj == (frozenset({1, 2}), frozenset({0}), frozenset({0}))
    assert g.masks == (0b110, 0b1, 0b1)
    assert g.edges() == [(0, 1), (0, 2)]
    assert g == Graph.from_edges(3, [(2, 0), (1, 0)])


def test_generate_examples(heawood):
    k5 = generators.generate("complete", 5)
    assert k5.n == 5 and set(k5.degrees()) == {4}
    k33 = generators.generate("complete_bipartite", 3, 3)
    assert k33.n == 6 and regular_degree(k33) == 3 and bipartition(k33) is not None
    h = to_nx(heawood)
    assert heawood.n == 14 and regular_degree(heawood) == 3
    assert nx.is_bipartite(h) and nx.girth(h) == 6


@pytest.mark.parametrize(
    "name,n,girth,bip",
    [("heawood", 14, 6, True), ("pappus", 18, 6, True), ("desargues", 20, 6, True),
     ("moebius_kantor", 16, 6, True), ("petersen", 10, 5, False)],
)
def test_named_graphs_match_networkx(name, n, girth, bip):
    g = generators.named(name)
    h = to_nx(g)
    assert g.n == n and regular_degree(g) == 3
    assert nx.girth(h) == girth and nx.is_bipartite(h) == bip
    reference = {"heawood": nx.heawood_graph, "desargues": nx.desargues_graph,
                 "moebius_kantor": nx.moebius_kantor_graph, "petersen": nx.petersen_graph,
                 "pappus": nx.pappus_graph}[name]()
    assert nx.is_isomorphic(h, reference)


@pytest.mark.parametrize(
    "family,params",
    [("random_regular", (7, 3, 1)), ("random_cubic_bipartite", (7, 1)), ("random_cubic_bipartite", (4, 1)),
     ("cycle", (2,)), ("complete", (-1,)), ("named", ("tutte",)), ("nope", ()), ("path", (1, 2))],
)
def test_generate_rejects_infeasible(family, params):
    with pytest.raises(ParameterError):
        generators.generate(family, *params)


@given(st.integers(4, 16), st.integers(2, 5), st.integers(0, 10**6))
def test_random_regular_is_connected_and_regular(n, r, seed):
    if n * r % 2 or r >= n:
        return
    g = generators.random_regular(n, r, seed)
    assert regular_degree(g) == r and is_connected(g)
    assert g == generators.random_regular(n, r, seed)


@given(st.integers(3, 10), st.integers(0, 10**6))
def test_random_cubic_bipartite(m, seed):
    g = generators.random_cubic_bipartite(2 * m, seed)
    assert regular_degree(g) == 3 and is_connected(g) and bipartition(g) is not None


def test_induced_subgraph_examples():
    k5 = generators.complete(5)
    h, mapping = induced_subgraph(k5, {1, 3, 4})
    assert h == generators.complete(3) and mapping == {1: 0, 3: 1, 4: 2}
    c6 = generators.cycle(6)
    assert induced_subgraph(c6, {0, 1, 2})[0] == generators.path(3)
    assert induced_subgraph(c6, {0, 2, 4})[0].num_edges() == 0
    with pytest.raises(ParameterError):
        induced_subgraph(c6, {6})


@given(graphs())
def test_induced_subgraph_of_everything_is_identity(g):
    h, mapping = induced_subgraph(g, range(g.n))
    assert h == g and all(k == v for k, v in mapping.items())


def test_connectivity_examples():
    assert is_connected(generators.cycle(6))
    two = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert not is_connected(two) and components(two) == [frozenset({0, 1}), frozenset({2, 3})]
    assert is_connected(Graph.from_edges(1, []))
    assert is_connected(Graph.from_edges(0, []))


@given(graphs(max_n=10))
def test_components_match_networkx(g):
    ours = sorted(map(sorted, components(g)))
    theirs = sorted(map(sorted, nx.connected_components(to_nx(g))))
    assert ours == theirs
    assert is_connected(g) == (g.n == 0 or nx.is_connected(to_nx(g)))


def test_bipartition_examples():
    a, b = bipartition(generators.complete_bipartite(3, 3))
    assert len(a) == len(b) == 3
    assert bipartition(generators.cycle(5)) is None
    assert bipartition(Graph.from_edges(4, [])) == (frozenset(range(4)), frozenset())


@given(graphs(max_n=10))
def test_bipartition_is_proper(g):
    parts = bipartition(g)
    assert (parts is not None) == nx.is_bipartite(to_nx(g))
    if parts is not None:
        a, b = parts
        assert a | b == set(range(g.n)) and not a & b
        assert all((u in a) != (v in a) for u, v in g.edges())


def test_regular_degree():
    assert regular_degree(generators.cycle(5)) == 2
    assert regular_degree(generators.path(3)) is None
    assert regular_degree(Graph.from_edges(0, [])) is None


def test_hamiltonian_examples():
    assert find_hamiltonian_cycle(generators.cycle(6)) == (0, 1, 2, 3, 4, 5)
    assert find_hamiltonian_cycle(generators.complete(4)) == (0, 1, 2, 3)
    assert find_hamiltonian_cycle(generators.complete_bipartite(1, 3)) is None
    assert find_hamiltonian_cycle(generators.named("petersen")) is None
    with pytest.raises(CapExceeded):
        find_hamiltonian_cycle(generators.cycle(17))
    assert find_hamiltonian_cycle(generators.cycle(17), cap=None) is not None


def _hamiltonian_brute(g: Graph) -> bool:
    from itertools import permutations

    if g.n < 3:
        return False
    return any(is_cycle(g, (0, *p)) for p in permutations(range(1, g.n)))


@given(graphs(max_n=7))
def test_hamiltonian_search_matches_brute_force(g):
    c = find_hamiltonian_cycle(g)
    assert (c is not None) == _hamiltonian_brute(g)
    if c is not None:
        assert len(c) == g.n and is_cycle(g, c)


@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_relabel_preserves_structure(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert h.num_edges() == g.num_edges()
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())
