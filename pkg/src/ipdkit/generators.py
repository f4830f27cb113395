"""Graph families used as fixtures and random corpora.

Random families draw from :class:`random.Random` seeded with the given
integer, so a ``(family, params, seed)`` triple always yields the same graph.
"""

from __future__ import annotations

import random
from collections.abc import Sequence

from ipdkit.errors import ParameterError
from ipdkit.graph import Graph, is_connected

MAX_RETRIES = 10_000


def path(n: int) -> Graph:
    if n < 1:
        raise ParameterError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    if n < 0:
        raise ParameterError("complete graph needs n >= 0")
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 0 or n < 0:
        raise ParameterError("part sizes must be non-negative")
    return Graph.from_edges(m + n, ((i, m + j) for i in range(m) for j in range(n)))


def lcf(shifts: Sequence[int], repeats: int) -> Graph:
    """Cubic Hamiltonian graph from LCF notation ``[shifts]^repeats``."""
    n = len(shifts) * repeats
    edges = {(i, (i + 1) % n) for i in range(n)}
    for i in range(n):
        j = (i + shifts[i % len(shifts)]) % n
        edges.add((min(i, j), max(i, j)))
    return Graph.from_edges(n, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


NAMED = {
    "heawood": lambda: lcf([5, -5], 7),
    "pappus": lambda: lcf([5, 7, -7, 7, -7, -5], 3),
    "desargues": lambda: lcf([5, -5, 9, -9], 5),
    "moebius_kantor": lambda: lcf([5, -5], 8),
    "petersen": petersen,
}


def named(name: str) -> Graph:
    try:
        return NAMED[name]()
    except KeyError:
        raise ParameterError(f"unknown named graph {name!r}; choose from {sorted(NAMED)}") from None


def _pairing_attempt(rng: random.Random, n: int, r: int) -> set[tuple[int, int]] | None:
    """One run of the pairing model, drawing point pairs sequentially.

    A pair that would create a loop or a repeated edge is redrawn; when no
    admissible pair is left the attempt fails and the caller restarts.
    """
    points = [v for v in range(n) for _ in range(r)]
    edges: set[tuple[int, int]] = set()
    while points:
        for _ in range(32):
            i, j = rng.sample(range(len(points)), 2)
            u, v = points[i], points[j]
            if u != v and (min(u, v), max(u, v)) not in edges:
                break
        else:
            admissible = [
                (i, j)
                for i in range(len(points))
                for j in range(i + 1, len(points))
                if points[i] != points[j] and (min(points[i], points[j]), max(points[i], points[j])) not in edges
            ]
            if not admissible:
                return None
            i, j = rng.choice(admissible)
            u, v = points[i], points[j]
        edges.add((min(u, v), max(u, v)))
        for k in sorted((i, j), reverse=True):
            points[k] = points[-1]
            points.pop()
    return edges


def random_regular(n: int, r: int, seed: int) -> Graph:
    """Connected simple ``r``-regular graph from the pairing model.

    Pairs are drawn sequentially, rejecting loops and repeated edges as they
    arise; stuck or disconnected outcomes restart, up to ``MAX_RETRIES`` times.
    """
    feasible = (r >= 2 and n > r and r * n % 2 == 0) or (r, n) in ((1, 2), (0, 1))
    if not feasible:
        raise ParameterError(f"no connected {r}-regular graph on {n} vertices")
    rng = random.Random(seed)
    for _ in range(MAX_RETRIES):
        edges = _pairing_attempt(rng, n, r)
        if edges is None:
            continue
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g
    raise ParameterError(f"random_regular({n}, {r}) found no simple connected sample in {MAX_RETRIES} tries")


def random_cubic_bipartite(n: int, seed: int) -> Graph:
    """Connected cubic bipartite graph on parts ``0..n/2-1`` and ``n/2..n-1``.

    Sampled as the union of three uniformly random perfect matchings between
    the parts, rejecting repeated edges and disconnected outcomes.
    """
    if n % 2 or n < 6:
        raise ParameterError("cubic bipartite graphs need even n >= 6")
    m = n // 2
    rng = random.Random(seed)
    for _ in range(MAX_RETRIES):
        edges: set[tuple[int, int]] = set()
        for _ in range(3):
            targets = list(range(m, n))
            rng.shuffle(targets)
            edges.update(enumerate(targets))
        if len(edges) != 3 * m:
            continue
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g
    raise ParameterError(f"random_cubic_bipartite({n}) found no sample in {MAX_RETRIES} tries")


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "named": named,
    "random_regular": random_regular,
    "random_cubic_bipartite": random_cubic_bipartite,
}


def generate(family: str, *params) -> Graph:
    """Build a graph by family name, e.g. ``generate("complete_bipartite", 3, 3)``."""
    try:
        builder = FAMILIES[family]
    except KeyError:
        raise ParameterError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    try:
        return builder(*params)
    except TypeError as exc:
        raise ParameterError(f"bad parameters for {family}: {exc}") from None
