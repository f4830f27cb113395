from __future__ import annotations

import pytest
from hypothesis import given

from conftest import bowtie, graphs
from ipdkit import generators
from ipdkit.ekk import (
    EkkWitness,
    Star,
    StarPartition,
    bad_components_after_removal,
    ekk_condition,
    ipd_via_ekk,
    is_ekk_witness,
    is_star_partition,
    star_partition,
)
from ipdkit.errors import CapExceeded, ParameterError
from ipdkit.graph import Graph
from ipdkit.solver import exists_ipd


def test_star_partition_examples():
    assert star_partition(generators.complete(3)) is None
    assert star_partition(generators.path(3)) == StarPartition((Star(1, (0, 2)),))
    c6 = generators.cycle(6)
    p = star_partition(c6)
    assert is_star_partition(c6, p, 2) and all(len(s.leaves) == 1 for s in p.parts)
    assert len(p.parts) == 3


def test_star_partition_with_larger_stars():
    claw = generators.complete_bipartite(1, 3)
    assert star_partition(claw, 2) is None
    assert star_partition(claw, 3) == StarPartition((Star(0, (1, 2, 3)),))


def test_parameter_checks():
    with pytest.raises(ParameterError):
        star_partition(generators.path(3), 1)
    with pytest.raises(ParameterError):
        ekk_condition(generators.path(3), 1)
    with pytest.raises(CapExceeded):
        star_partition(generators.cycle(13))
    with pytest.raises(CapExceeded):
        ekk_condition(generators.cycle(17))


def test_ekk_condition_examples():
    w = ekk_condition(generators.complete(3))
    assert w == EkkWitness((), (frozenset({0, 1, 2}),))
    assert w.to_document() == {"S": [], "bad_components": [[0, 1, 2]]}
    assert ekk_condition(generators.path(3)) is None
    assert ekk_condition(generators.complete(4)) is None


def test_ipd_via_ekk_examples():
    assert not ipd_via_ekk(generators.complete(5))
    assert ipd_via_ekk(generators.cycle(4))
    assert not ipd_via_ekk(bowtie())
    w = ekk_condition(bowtie())
    assert w is not None and is_ekk_witness(bowtie(), w, 2)


def test_witness_validation():
    star = generators.complete_bipartite(1, 5)
    w = ekk_condition(star)
    assert w.s == (0,) and len(w.bad_components) == 5
    assert is_ekk_witness(star, w, 2)
    assert not is_ekk_witness(star, EkkWitness((0,), w.bad_components[:2]), 2)
    assert bad_components_after_removal(star, (0,)) == [frozenset({i}) for i in range(1, 6)]


def test_bad_star_partitions_are_rejected():
    p3 = generators.path(3)
    assert not is_star_partition(p3, StarPartition((Star(0, (1, 2)),)), 2)
    assert not is_star_partition(p3, StarPartition((Star(1, (0,)),)), 2)
    assert not is_star_partition(generators.complete(3), StarPartition((Star(1, (0, 2)),)), 2)


@given(graphs(max_n=7))
def test_star_partition_equivalence(g):
    p = star_partition(g)
    w = ekk_condition(g)
    assert (p is None) != (w is None)
    assert (p is not None) == (exists_ipd(g) is not None) == ipd_via_ekk(g)
    if p is not None:
        assert is_star_partition(g, p, 2)
    else:
        assert is_ekk_witness(g, w, 2)


@given(graphs(max_n=7))
def test_three_star_equivalence(g):
    p = star_partition(g, 3)
    w = ekk_condition(g, 3)
    assert (p is None) != (w is None)
    if p is not None:
        assert is_star_partition(g, p, 3)


def test_empty_graph():
    g = Graph.from_edges(0, [])
    assert star_partition(g) == StarPartition(())
    assert ekk_condition(g) is None
