from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs, to_nx
from ipdkit.enumeration import canonical_form, canonical_rows, connected_graphs, generator_binary, iter_graph6
from ipdkit.errors import ParameterError
from ipdkit.graph import Graph, bipartition, is_connected
from ipdkit.structure import is_claw_free

# OEIS A001349, A022562, A006823 (cubic bipartite, by n), A002851
CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
CLAW_FREE = {4: 5, 5: 14, 6: 50, 7: 191, 8: 881}
CUBIC_BIPARTITE = {6: 1, 8: 1, 10: 2, 12: 5, 14: 13}
CUBIC = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}

needs_c = pytest.mark.skipif(generator_binary() is None, reason="no C compiler")


@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_canonical_rows_are_relabelling_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_rows(g) == canonical_rows(g.relabel(perm))


@given(graphs(max_n=7), graphs(max_n=7))
def test_canonical_rows_decide_isomorphism(g, h):
    if g.n != h.n:
        return
    same = canonical_rows(g) == canonical_rows(h)
    assert same == nx.is_isomorphic(to_nx(g), to_nx(h))


@given(graphs(max_n=8))
def test_canonical_form_is_isomorphic(g):
    assert nx.is_isomorphic(to_nx(g), to_nx(canonical_form(g)))


@pytest.mark.parametrize("n", range(1, 7))
def test_python_backend_counts(n):
    graphs_n = list(connected_graphs(n, backend="python"))
    assert len(graphs_n) == CONNECTED[n]
    assert all(is_connected(g) and g.n == n for g in graphs_n)


@needs_c
@pytest.mark.parametrize("n", range(1, 9))
def test_c_backend_counts(n):
    assert sum(1 for _ in iter_graph6(n, backend="c")) == CONNECTED[n]


@needs_c
@pytest.mark.parametrize("n", range(1, 7))
def test_backends_agree(n):
    for kw in ({}, {"claw_free": True}, {"bipartite": True}, {"min_degree": 2}, {"max_degree": 2}):
        c = sorted(iter_graph6(n, backend="c", **kw))
        py = sorted(iter_graph6(n, backend="python", **kw))
        assert c == py, kw


@needs_c
@pytest.mark.parametrize("n,count", sorted(CLAW_FREE.items()))
def test_claw_free_counts(n, count):
    found = list(connected_graphs(n, claw_free=True))
    assert len(found) == count and all(is_claw_free(g) for g in found)


@needs_c
@pytest.mark.parametrize("n,count", sorted(CUBIC_BIPARTITE.items()))
def test_cubic_bipartite_counts(n, count):
    found = list(connected_graphs(n, bipartite=True, min_degree=3, max_degree=3))
    assert len(found) == count and all(bipartition(g) is not None for g in found)


@needs_c
@pytest.mark.parametrize("n,count", sorted(CUBIC.items()))
def test_cubic_counts(n, count):
    assert sum(1 for _ in iter_graph6(n, min_degree=3, max_degree=3)) == count


@pytest.mark.slow
@needs_c
def test_order_eight_is_non_isomorphic():
    found = list(connected_graphs(8))
    assert len(found) == CONNECTED[8]
    assert len({canonical_rows(g) for g in found}) == len(found)


def test_bad_arguments():
    with pytest.raises(ParameterError):
        list(iter_graph6(0))
    with pytest.raises(ParameterError):
        list(iter_graph6(17))
    with pytest.raises(ParameterError):
        list(iter_graph6(4, backend="nauty"))


def test_empty_results():
    assert list(iter_graph6(3, min_degree=3, backend="python")) == []
    assert list(iter_graph6(1, min_degree=1, backend="python")) == []
    assert [g.n for g in connected_graphs(1, backend="python")] == [1]
    assert Graph.from_edges(1, []) in list(connected_graphs(1, backend="python"))
