"""Blocks, cut vertices, claws and the "bad graph" predicate."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ipdkit.errors import PreconditionError
from ipdkit.graph import Graph, is_connected

Edge = tuple[int, int]


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks of a graph in DFS completion order.

    ``edges[i]`` holds the edges of ``blocks[i]`` as ``(u, v)`` with ``u < v``.
    Isolated vertices appear as edgeless singleton blocks.
    """

    blocks: tuple[frozenset[int], ...]
    edges: tuple[frozenset[Edge], ...]
    cut_vertices: frozenset[int]

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def block_cut_adjacency(self) -> dict[int, tuple[int, ...]]:
        """Map each cut vertex to the indices of the blocks containing it."""
        return {
            c: tuple(i for i, b in enumerate(self.blocks) if c in b) for c in sorted(self.cut_vertices)
        }


@dataclass(frozen=True)
class ClawWitness:
    center: int
    leaves: tuple[int, int, int]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Biconnected components via the lowpoint DFS, iteratively."""
    disc = [-1] * g.n
    low = [0] * g.n
    blocks: list[frozenset[int]] = []
    block_edges: list[frozenset[Edge]] = []
    cuts: set[int] = set()
    clock = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        if not g.adj[root]:
            blocks.append(frozenset((root,)))
            block_edges.append(frozenset())
            continue
        root_children = 0
        edge_stack: list[Edge] = []
        stack = [(root, -1, iter(sorted(g.adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    edge_stack.append((v, u))
                    disc[u] = low[u] = clock
                    clock += 1
                    stack.append((u, v, iter(sorted(g.adj[u]))))
                    advanced = True
                    break
                if u != parent and disc[u] < disc[v]:
                    edge_stack.append((v, u))
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent == root:
                    root_children += 1
                else:
                    cuts.add(parent)
                es: set[Edge] = set()
                while True:
                    a, b = edge_stack.pop()
                    es.add((min(a, b), max(a, b)))
                    if (a, b) == (parent, v):
                        break
                blocks.append(frozenset(x for e in es for x in e))
                block_edges.append(frozenset(es))
        if root_children > 1:
            cuts.add(root)
    return BlockDecomposition(tuple(blocks), tuple(block_edges), frozenset(cuts))


def leaf_blocks(d: BlockDecomposition) -> list[int]:
    return [i for i, b in enumerate(d.blocks) if len(b & d.cut_vertices) <= 1]


def is_odd_complete(g: Graph) -> bool:
    """True iff ``g`` is ``K_m`` for odd ``m`` (``K_1`` included)."""
    return g.n % 2 == 1 and g.num_edges() == g.n * (g.n - 1) // 2


def _block_is_odd_complete(vertices: frozenset[int], edges: frozenset[Edge]) -> bool:
    k = len(vertices)
    return k % 2 == 1 and len(edges) == k * (k - 1) // 2


def is_bad(g: Graph) -> bool:
    """True iff ``g`` is connected and every block is an odd complete graph."""
    if g.n == 0 or not is_connected(g):
        raise PreconditionError("is_bad expects a non-empty connected graph")
    d = block_decomposition(g)
    return all(_block_is_odd_complete(b, e) for b, e in zip(d.blocks, d.edges))


def find_claw(g: Graph) -> ClawWitness | None:
    """First induced K_{1,3}: centres by id, leaf triples lexicographically."""
    for c in range(g.n):
        if len(g.adj[c]) < 3:
            continue
        for a, b, d in combinations(sorted(g.adj[c]), 3):
            if not (g.has_edge(a, b) or g.has_edge(a, d) or g.has_edge(b, d)):
                return ClawWitness(c, (a, b, d))
    return None


def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None
