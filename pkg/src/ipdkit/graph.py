"""Simple undirected graphs on dense vertex ids and the basic queries on them."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

from ipdkit.errors import CapExceeded, ParameterError

#: Vertex sequences. A path is open, a cycle is implicitly closed.
VertexPath = tuple[int, ...]
VertexCycle = tuple[int, ...]

HAMILTONIAN_CAP = 16


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with vertices ``0..n-1``.

    ``masks[v]`` is the neighbourhood of ``v`` as an int bitmask; the search
    kernels work on these directly. ``adj[v]`` is the same set as a frozenset.
    """

    n: int
    masks: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.masks) != self.n:
            raise ParameterError(f"adjacency has {len(self.masks)} rows for n={self.n}")
        masks = self.masks
        for v, m in enumerate(masks):
            if m < 0 or m >> self.n:
                raise ParameterError(f"neighbour of {v} out of range")
            if m >> v & 1:
                raise ParameterError(f"self-loop at {v}")
            for u in iter_bits(m):
                if not masks[u] >> v & 1:
                    raise ParameterError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def _trusted(cls, masks: tuple[int, ...]) -> Graph:
        """Build without validation; for decoders whose output is symmetric by construction."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", len(masks))
        object.__setattr__(g, "masks", masks)
        return g

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(iter_bits(m)) for m in self.masks)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        masks = [0] * n
        for u, v in edges:
            if u == v:
                raise ParameterError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge {u}-{v} out of range for n={n}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls._trusted(tuple(masks))

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> Graph:
        return cls(len(masks), tuple(masks))

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> Graph:
        masks = []
        for v, nbrs in enumerate(adj):
            m = 0
            for u in nbrs:
                if not 0 <= u < len(adj):
                    raise ParameterError(f"neighbour {u} of {v} out of range")
                m |= 1 << u
            masks.append(m)
        return cls(len(masks), tuple(masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def has_edge(self, u: int, v: int) -> bool:
        return (self.masks[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.masks]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    def vertices(self) -> range:
        return range(self.n)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ParameterError("relabelling must be a permutation of 0..n-1")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``s``, relabelled in ascending order of old ids.

    Returns the graph and the ``old -> new`` id mapping.
    """
    keep = sorted(set(s))
    for v in keep:
        if not 0 <= v < g.n:
            raise ParameterError(f"vertex {v} out of range for n={g.n}")
    mapping = {v: i for i, v in enumerate(keep)}
    masks = []
    for v in keep:
        m = 0
        for u in iter_bits(g.masks[v]):
            if u in mapping:
                m |= 1 << mapping[u]
        masks.append(m)
    return Graph._trusted(tuple(masks)), mapping


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by their lowest vertex."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.masks[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(frozenset(iter_bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    """Reachability test. The empty graph counts as connected."""
    if g.n == 0:
        return True
    masks = g.masks
    comp = frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= masks[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~comp
        comp |= frontier
    return comp == (1 << g.n) - 1


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """2-colouring of ``g`` or ``None`` if it has an odd cycle.

    In every component the lowest-id vertex goes to the first part.
    """
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if colour[u] == -1:
                    colour[u] = 1 - colour[v]
                    queue.append(u)
                elif colour[u] == colour[v]:
                    return None
    a = frozenset(v for v in range(g.n) if colour[v] == 0)
    return a, frozenset(range(g.n)) - a


def regular_degree(g: Graph) -> int | None:
    if g.n == 0:
        return None
    degs = set(g.degrees())
    return degs.pop() if len(degs) == 1 else None


def is_path(g: Graph, p: Sequence[int]) -> bool:
    """True iff ``p`` lists distinct in-range vertices with consecutive ones adjacent."""
    n, masks = g.n, g.masks
    seen = 0
    for v in p:
        if not 0 <= v < n or seen >> v & 1:
            return False
        seen |= 1 << v
    return all(masks[a] >> b & 1 for a, b in zip(p, p[1:]))


def is_cycle(g: Graph, c: Sequence[int]) -> bool:
    return len(c) >= 3 and is_path(g, c) and g.has_edge(c[-1], c[0])


def find_hamiltonian_cycle(g: Graph, cap: int | None = HAMILTONIAN_CAP) -> VertexCycle | None:
    """Backtracking search for a Hamiltonian cycle.

    Starts at vertex 0 and always tries the lowest-id extension first, so the
    returned cycle is the lexicographically first one the search meets. A
    branch is cut as soon as some unvisited vertex keeps fewer than two
    usable neighbours; only the neighbours of the vertex just left behind
    need rechecking at each step. ``cap=None`` disables the size guard.
    """
    n = g.n
    if cap is not None and n > cap:
        raise CapExceeded("hamiltonian cycle search", n, cap)
    if n < 3:
        return None
    masks = g.masks
    if any(m.bit_count() < 2 for m in masks) or not is_connected(g):
        return None
    full = (1 << n) - 1
    path = [0]

    def extend(v: int, visited: int) -> bool:
        rest = full & ~visited
        if not rest:
            return masks[v] & 1 == 1
        cand = masks[v] & rest
        while cand:
            low = cand & -cand
            cand ^= low
            # moving on to u retires v, so only v's unvisited neighbours lose an option
            nrest = rest ^ low
            usable = nrest | low | 1
            w = masks[v] & nrest
            while w:
                wl = w & -w
                if (masks[wl.bit_length() - 1] & usable).bit_count() < 2:
                    break
                w ^= wl
            else:
                path.append(low.bit_length() - 1)
                if extend(low.bit_length() - 1, visited | low):
                    return True
                path.pop()
        return False

    return tuple(path) if extend(0, 1) else None
