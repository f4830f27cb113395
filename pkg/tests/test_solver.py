from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import bowtie, graphs, to_nx
from ipdkit import generators
from ipdkit.errors import CapExceeded, ParameterError
from ipdkit.graph import Graph
from ipdkit.solver import (
    InducedPathDecomposition,
    exists_ipd,
    has_ipd,
    induced_paths_by_min_vertex,
    is_induced_path,
    min_ipd,
    validate_ipd,
)


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def induces_path(h: nx.Graph, block) -> bool:
    s = h.subgraph(block)
    return (
        len(block) >= 2
        and nx.is_connected(s)
        and s.number_of_edges() == len(block) - 1
        and max(d for _, d in s.degree()) <= 2
    )


def rho_brute(g: Graph) -> int | None:
    """Minimum IPD size by trying every set partition (networkx decides inducedness)."""
    h = to_nx(g)
    best = None
    for part in set_partitions(list(range(g.n))):
        if all(induces_path(h, b) for b in part):
            best = len(part) if best is None else min(best, len(part))
    return best


def test_is_induced_path_examples():
    c6, k3 = generators.cycle(6), generators.complete(3)
    assert is_induced_path(c6, (0, 1, 2))
    assert not is_induced_path(k3, (0, 1, 2))
    assert not is_induced_path(c6, tuple(range(6)))
    assert not is_induced_path(c6, (0, 2))
    assert not is_induced_path(c6, (0, 1, 0))
    with pytest.raises(ParameterError):
        is_induced_path(c6, (0, 9))


def test_validate_examples():
    c4 = generators.cycle(4)
    assert validate_ipd(c4, InducedPathDecomposition([(0, 1), (2, 3)])).ok
    report = validate_ipd(c4, [(0, 1, 2)])
    assert report.kinds() == {"uncovered-vertex"}
    assert report.violations[0].vertices == (3,)
    assert validate_ipd(generators.complete(3), [(0, 1, 2)]).kinds() == {"not-induced"}


def test_validate_reports_every_violation():
    g = generators.path(5)
    report = validate_ipd(g, [(0, 2), (1,), (1, 2), (9, 0)])
    assert report.kinds() == {"not-a-path", "order-below-2", "overlap", "uncovered-vertex"}
    doc = report.to_document()
    assert doc["ok"] is False and len(doc["violations"]) == len(report.violations)


def test_exists_examples():
    assert exists_ipd(generators.complete(5)) is None
    assert exists_ipd(generators.complete(4)).paths == ((0, 1), (2, 3))
    assert exists_ipd(bowtie()) is None
    assert exists_ipd(Graph.from_edges(0, [])).paths == ()
    assert not has_ipd(Graph.from_edges(1, []))


def test_min_examples():
    assert min_ipd(generators.path(7)) == (1, InducedPathDecomposition([tuple(range(7))]))
    rho, d = min_ipd(generators.cycle(6))
    assert rho == 2 and validate_ipd(generators.cycle(6), d).ok
    assert min_ipd(generators.complete(5)) is None
    assert min_ipd(Graph.from_edges(0, [])) == (0, InducedPathDecomposition([]))


def test_c6_has_no_single_path():
    assert rho_brute(generators.cycle(6)) == 2


@pytest.mark.parametrize("m", range(1, 9))
def test_complete_graphs(m):
    out = min_ipd(generators.complete(m))
    if m % 2:
        assert out is None
    else:
        assert out[0] == m // 2


def test_caps():
    with pytest.raises(CapExceeded):
        exists_ipd(generators.cycle(25))
    with pytest.raises(CapExceeded):
        min_ipd(generators.cycle(19))
    assert exists_ipd(generators.cycle(25), cap=None) is not None
    assert min_ipd(generators.cycle(19), cap=30)[0] == 2


@settings(max_examples=80)
@given(graphs(max_n=7))
def test_solver_matches_partition_oracle(g):
    expected = rho_brute(g)
    d = exists_ipd(g)
    assert (d is not None) == (expected is not None)
    out = min_ipd(g)
    if expected is None:
        assert out is None
    else:
        rho, cert = out
        assert rho == expected == len(cert)
        assert validate_ipd(g, cert).ok
        assert validate_ipd(g, d).ok
        assert all(2 <= len(p) <= 3 for p in d)


@given(graphs(min_n=1, max_n=8, connected=True))
def test_exists_iff_min_present(g):
    assert (exists_ipd(g) is None) == (min_ipd(g) is None)


@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_rho_is_permutation_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    a, b = min_ipd(g), min_ipd(g.relabel(perm))
    assert (a is None) == (b is None)
    if a is not None:
        assert a[0] == b[0]


@given(graphs(max_n=7))
def test_induced_path_enumeration_is_complete(g):
    from itertools import permutations

    found = {p for plist in induced_paths_by_min_vertex(g) for _, p in plist}
    brute = set()
    for k in range(2, g.n + 1):
        for p in permutations(range(g.n), k):
            if p[0] < p[-1] and is_induced_path(g, p):
                brute.add(p)
    assert found == brute


def test_solver_is_deterministic():
    rnd = random.Random(3)
    for _ in range(20):
        h = nx.gnp_random_graph(10, 0.35, seed=rnd.randrange(10**6))
        g = Graph.from_edges(10, h.edges())
        assert exists_ipd(g) == exists_ipd(g) and min_ipd(g) == min_ipd(g)
