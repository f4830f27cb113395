"""Star partitions and the bad-component condition, both by brute force.

For ``k >= 2`` a graph's vertex set splits into parts inducing stars
``K_{1,1} .. K_{1,k}`` exactly when no vertex set ``S`` leaves more than
``k * |S|`` bad components behind (a bad component being a connected graph
whose blocks are all odd complete graphs). Both sides are computed here
independently so that the equivalence can be checked, and with ``k = 2``
the star side decides IPD existence.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ipdkit.errors import CapExceeded, ParameterError
from ipdkit.graph import Graph, components, induced_subgraph, iter_bits
from ipdkit.structure import is_bad

STAR_CAP = 12
CONDITION_CAP = 16


@dataclass(frozen=True)
class Star:
    center: int
    leaves: tuple[int, ...]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset((self.center, *self.leaves))


@dataclass(frozen=True)
class StarPartition:
    parts: tuple[Star, ...]

    def vertex_sets(self) -> list[frozenset[int]]:
        return [s.vertices for s in self.parts]


@dataclass(frozen=True)
class EkkWitness:
    s: tuple[int, ...]
    bad_components: tuple[frozenset[int], ...]

    def to_document(self) -> dict:
        return {"S": list(self.s), "bad_components": [sorted(c) for c in self.bad_components]}


def _check_k(k: int) -> None:
    if k < 2:
        raise ParameterError("star size bound must be at least 2")


def is_star_partition(g: Graph, p: StarPartition, k: int) -> bool:
    """Parts cover ``V(g)`` disjointly and each induces ``K_{1,j}`` with ``1 <= j <= k``."""
    covered: list[int] = []
    for star in p.parts:
        if not 1 <= len(star.leaves) <= k:
            return False
        if not all(g.has_edge(star.center, x) for x in star.leaves):
            return False
        if any(g.has_edge(a, b) for a, b in combinations(star.leaves, 2)):
            return False
        covered.extend(star.vertices)
    return sorted(covered) == list(range(g.n))


def star_partition(g: Graph, k: int = 2, cap: int | None = STAR_CAP) -> StarPartition | None:
    """Partition into induced stars with 1..k leaves, or ``None``.

    Branches on the lowest uncovered vertex, first as a centre (leaf sets in
    increasing size, lexicographic), then as a leaf of each uncovered
    neighbour. Failed uncovered sets are memoised.
    """
    _check_k(k)
    if cap is not None and g.n > cap:
        raise CapExceeded("star_partition", g.n, cap)
    masks = g.masks
    failed: set[int] = set()
    parts: list[Star] = []

    def independent(vs: tuple[int, ...]) -> bool:
        return all(not masks[a] >> b & 1 for a, b in combinations(vs, 2))

    def solve(unc: int) -> bool:
        if not unc:
            return True
        if unc in failed:
            return False
        vbit = unc & -unc
        v = vbit.bit_length() - 1
        near = list(iter_bits(masks[v] & unc))
        for size in range(1, k + 1):
            for leaves in combinations(near, size):
                if not independent(leaves):
                    continue
                parts.append(Star(v, leaves))
                rest = unc & ~vbit
                for x in leaves:
                    rest &= ~(1 << x)
                if solve(rest):
                    return True
                parts.pop()
        for c in near:
            # v as a leaf of c with at least one co-leaf (a lone edge was tried above);
            # co-leaves must avoid v's neighbourhood
            others = list(iter_bits(masks[c] & unc & ~masks[v] & ~vbit))
            for size in range(1, k):
                for extra in combinations(others, size):
                    if not independent(extra):
                        continue
                    leaves = (v, *extra)
                    parts.append(Star(c, leaves))
                    rest = unc & ~vbit & ~(1 << c)
                    for x in extra:
                        rest &= ~(1 << x)
                    if solve(rest):
                        return True
                    parts.pop()
        failed.add(unc)
        return False

    return StarPartition(tuple(parts)) if solve((1 << g.n) - 1) else None


def bad_components_after_removal(g: Graph, s: tuple[int, ...]) -> list[frozenset[int]]:
    """Components of ``g - s`` that are bad, as vertex sets of ``g``."""
    keep = [v for v in range(g.n) if v not in set(s)]
    h, mapping = induced_subgraph(g, keep)
    back = {new: old for old, new in mapping.items()}
    out = []
    for comp in components(h):
        sub, _ = induced_subgraph(h, comp)
        if is_bad(sub):
            out.append(frozenset(back[x] for x in comp))
    return out


def is_ekk_witness(g: Graph, w: EkkWitness, k: int) -> bool:
    actual = set(bad_components_after_removal(g, w.s))
    return (
        len(set(w.bad_components)) == len(w.bad_components)
        and set(w.bad_components) <= actual
        and len(w.bad_components) > k * len(w.s)
    )


def ekk_condition(g: Graph, k: int = 2, cap: int | None = CONDITION_CAP) -> EkkWitness | None:
    """First ``S`` (by size, then lexicographically) leaving more than ``k|S|`` bad components.

    ``None`` means the condition holds for every vertex subset.
    """
    _check_k(k)
    if cap is not None and g.n > cap:
        raise CapExceeded("ekk_condition", g.n, cap)
    for size in range(g.n + 1):
        for s in combinations(range(g.n), size):
            bad = bad_components_after_removal(g, s)
            if len(bad) > k * size:
                return EkkWitness(s, tuple(bad))
    return None


def ipd_via_ekk(g: Graph, cap: int | None = STAR_CAP) -> bool:
    """IPD existence decided through a partition into induced K_{1,1} / K_{1,2} stars."""
    return star_partition(g, 2, cap) is not None
