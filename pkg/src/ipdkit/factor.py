"""Bipartite matchings, 3-edge-colourings of cubic bipartite graphs and 2-factors.

The main entry point is :func:`c6_factor`, which finds a 2-factor whose
cycles all have at least six vertices in a connected cubic bipartite graph.
Such a factor always exists; the search below tries cheap colour-class
pairings first and falls back to enumerating every 2-factor.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from ipdkit.errors import CapExceeded, InvariantViolation, PreconditionError
from ipdkit.graph import Graph, VertexCycle, bipartition, is_connected, regular_degree

Edge = tuple[int, int]

ENUMERATION_CAP = 24
PAIRINGS = ((0, 1), (0, 2), (1, 2))


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Matching:
    n: int
    edges: frozenset[Edge]

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def is_perfect(self) -> bool:
        return 2 * len(self.edges) == self.n

    def mate(self) -> dict[int, int]:
        out = {}
        for u, v in self.edges:
            out[u] = v
            out[v] = u
        return out


@dataclass(frozen=True)
class TwoFactor:
    cycles: tuple[VertexCycle, ...]

    @property
    def min_cycle(self) -> int:
        return min((len(c) for c in self.cycles), default=0)

    def lengths(self) -> list[int]:
        return [len(c) for c in self.cycles]

    def to_document(self) -> dict:
        return {"cycles": [list(c) for c in self.cycles]}


def is_two_factor(g: Graph, f: TwoFactor) -> bool:
    """Spanning, vertex-disjoint cycles of ``g``; every vertex has factor degree 2."""
    seen: list[int] = []
    for c in f.cycles:
        if len(c) < 3:
            return False
        for a, b in zip(c, c[1:] + c[:1]):
            if not (0 <= a < g.n and 0 <= b < g.n) or not g.has_edge(a, b):
                return False
        seen.extend(c)
    return sorted(seen) == list(range(g.n))


def _check_bipartition(g: Graph, parts: tuple[Sequence[int], Sequence[int]]) -> tuple[list[int], set[int]]:
    a, b = set(parts[0]), set(parts[1])
    if a & b or a | b != set(range(g.n)):
        raise PreconditionError("parts must partition the vertex set")
    for u, v in g.edges():
        if (u in a) == (v in a):
            raise PreconditionError(f"edge {u}-{v} lies inside one part")
    return sorted(a), b


def max_matching_bipartite(g: Graph, parts: tuple[Sequence[int], Sequence[int]]) -> Matching:
    """Maximum matching by Hopcroft-Karp phases.

    Free left vertices and their neighbours are scanned in ascending id order,
    which makes the result deterministic.
    """
    left, _ = _check_bipartition(g, parts)
    nbrs = {u: sorted(g.adj[u]) for u in left}
    mate: dict[int, int] = {}
    inf = float("inf")

    while True:
        dist: dict[int, float] = {}
        queue = deque()
        for u in left:
            if u not in mate:
                dist[u] = 0
                queue.append(u)
        reachable_free = False
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                x = mate.get(w)
                if x is None:
                    reachable_free = True
                elif x not in dist:
                    dist[x] = dist[u] + 1
                    queue.append(x)
        if not reachable_free:
            break

        def augment(u: int) -> bool:
            for w in nbrs[u]:
                x = mate.get(w)
                if x is None or (dist.get(x, inf) == dist[u] + 1 and augment(x)):
                    mate[u] = w
                    mate[w] = u
                    return True
            dist[u] = inf
            return False

        progressed = False
        for u in left:
            if u not in mate and augment(u):
                progressed = True
        if not progressed:
            break
    return Matching(g.n, frozenset(_edge(u, mate[u]) for u in left if u in mate))


def _require_cubic_bipartite(g: Graph) -> tuple[frozenset[int], frozenset[int]]:
    if regular_degree(g) != 3:
        raise PreconditionError("graph is not cubic")
    parts = bipartition(g)
    if parts is None:
        raise PreconditionError("graph is not bipartite")
    return parts


def three_edge_coloring(g: Graph) -> tuple[Matching, Matching, Matching]:
    """Split the edges of a cubic bipartite graph into three perfect matchings.

    Peels off one perfect matching, then a second from the 2-regular rest;
    the remaining edges form the third.
    """
    parts = _require_cubic_bipartite(g)
    first = max_matching_bipartite(g, parts)
    rest = Graph.from_edges(g.n, (e for e in g.edges() if e not in first.edges))
    second = max_matching_bipartite(rest, parts)
    third = Matching(g.n, frozenset(g.edges()) - first.edges - second.edges)
    classes = (first, second, third)
    if not all(m.is_perfect for m in classes):
        raise InvariantViolation("regular bipartite graph without a perfect matching")
    return classes


def _cycles_of(n: int, edges: Iterator[Edge] | frozenset[Edge]) -> tuple[VertexCycle, ...]:
    """Decompose a 2-regular spanning edge set into cycles.

    Each cycle starts at its lowest vertex and heads to the smaller neighbour;
    cycles are ordered by their first vertex.
    """
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    if any(len(x) != 2 for x in nbrs):
        raise PreconditionError("edge set is not 2-regular and spanning")
    seen = [False] * n
    cycles = []
    for s in range(n):
        if seen[s]:
            continue
        cyc = [s]
        seen[s] = True
        prev, cur = s, min(nbrs[s])
        while cur != s:
            cyc.append(cur)
            seen[cur] = True
            a, b = nbrs[cur]
            prev, cur = cur, (b if a == prev else a)
        cycles.append(tuple(cyc))
    return tuple(cycles)


def two_factor_from_coloring(coloring: Sequence[Matching], pair: tuple[int, int] = (0, 1)) -> TwoFactor:
    """Union of two colour classes, split into its cycles."""
    i, j = pair
    a, b = coloring[i], coloring[j]
    if i == j or a.edges & b.edges:
        raise PreconditionError("the two colour classes must be distinct and edge-disjoint")
    if not (a.is_perfect and b.is_perfect) or a.n != b.n:
        raise PreconditionError("colour classes must be perfect matchings of the same graph")
    return TwoFactor(_cycles_of(a.n, a.edges | b.edges))


def two_factors_from_coloring(coloring: Sequence[Matching]) -> list[TwoFactor]:
    return [two_factor_from_coloring(coloring, p) for p in PAIRINGS]


def enumerate_two_factors(g: Graph) -> Iterator[TwoFactor]:
    """Every 2-factor of ``g``, by include/exclude backtracking over sorted edges."""
    edges = g.edges()
    m = len(edges)
    deg = [0] * g.n
    left = [len(a) for a in g.adj]  # incident edges not yet decided
    chosen: list[Edge] = []

    def rec(i: int) -> Iterator[TwoFactor]:
        if i == m:
            if all(d == 2 for d in deg):
                yield TwoFactor(_cycles_of(g.n, chosen))
            return
        u, v = edges[i]
        left[u] -= 1
        left[v] -= 1
        if deg[u] < 2 and deg[v] < 2:
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            yield from rec(i + 1)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
        if deg[u] + left[u] >= 2 and deg[v] + left[v] >= 2:
            yield from rec(i + 1)
        left[u] += 1
        left[v] += 1

    if g.n and all(left[v] >= 2 for v in range(g.n)):
        yield from rec(0)


def _kempe_swap(classes: list[Matching], i: int, k: int, start: Edge) -> None:
    """Swap colours ``i`` and ``k`` along the alternating cycle through ``start``."""
    mi, mk = classes[i].mate(), classes[k].mate()
    chain = {start}
    u, use_k = start[1], True
    while True:
        w = (mk if use_k else mi)[u]
        e = _edge(u, w)
        if e in chain:
            break
        chain.add(e)
        u, use_k = w, not use_k
    n = classes[i].n
    classes[i], classes[k] = (
        Matching(n, classes[i].edges ^ chain),
        Matching(n, classes[k].edges ^ chain),
    )


def c6_factor_search(g: Graph, cap: int | None = ENUMERATION_CAP) -> tuple[TwoFactor, int]:
    """Like :func:`c6_factor` but also reports which stage (1, 2 or 3) succeeded."""
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    _require_cubic_bipartite(g)
    classes = list(three_edge_coloring(g))

    def good_pairing() -> TwoFactor | None:
        for f in two_factors_from_coloring(classes):
            if f.min_cycle >= 6:
                return f
        return None

    f = good_pairing()
    if f is not None:
        return f, 1
    for step in range(g.n * g.n):
        # a C4 alternates classes 0 and 1; recolour one of its edges with class 2
        base = two_factor_from_coloring(classes, (0, 1))
        square = next(c for c in base.cycles if len(c) == 4)
        e = _edge(square[0], square[1])
        i = 0 if e in classes[0].edges else 1
        if step % 2:
            e, i = _edge(square[1], square[2]), 1 - i
        _kempe_swap(classes, i, 2, e)
        f = good_pairing()
        if f is not None:
            return f, 2
    if cap is not None and g.n > cap:
        raise CapExceeded("c6_factor enumeration", g.n, cap)
    for f in enumerate_two_factors(g):
        if f.min_cycle >= 6:
            return f, 3
    raise InvariantViolation("connected cubic bipartite graph without a C>=6 factor")


def c6_factor(g: Graph, cap: int | None = ENUMERATION_CAP) -> TwoFactor:
    """2-factor of a connected cubic bipartite graph with every cycle of order >= 6."""
    return c6_factor_search(g, cap)[0]
