"""Checking and exact search for induced path decompositions (IPDs).

An IPD of ``g`` is a set of vertex-disjoint induced paths, each on at least
two vertices, that together cover every vertex. Every such path splits into
induced P2/P3 pieces, so an IPD exists iff ``V(g)`` partitions into parts
inducing K2 or P3; :func:`exists_ipd` searches that smaller space.
:func:`min_ipd` finds an IPD with the fewest paths.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from ipdkit.errors import CapExceeded, ParameterError
from ipdkit.graph import Graph, VertexPath, iter_bits

SOLVER_CAP = 24
RHO_CAP = 18

KINDS = ("not-a-path", "not-induced", "overlap", "uncovered-vertex", "order-below-2")


@dataclass(frozen=True)
class InducedPathDecomposition:
    paths: tuple[VertexPath, ...]

    def __init__(self, paths: Iterable[Sequence[int]]):
        object.__setattr__(self, "paths", tuple(tuple(p) for p in paths))

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def to_document(self, n: int) -> dict:
        return {"n": n, "paths": [list(p) for p in self.paths]}


@dataclass(frozen=True)
class Violation:
    path_index: int | None
    kind: str
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}

    def to_document(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [
                {"path": v.path_index, "kind": v.kind, "vertices": list(v.vertices)} for v in self.violations
            ],
        }


_OK = ValidationReport(())


def _chords(g: Graph, p: Sequence[int]) -> list[tuple[int, int]]:
    pos = {v: i for i, v in enumerate(p)}
    out = []
    for i, v in enumerate(p):
        for u in g.adj[v]:
            j = pos.get(u)
            if j is not None and j > i + 1:
                out.append((v, u))
    return out


def is_induced_path(g: Graph, p: Sequence[int]) -> bool:
    """True iff ``p`` is a path of ``g`` with no chord."""
    for v in p:
        if not 0 <= v < g.n:
            raise ParameterError(f"vertex {v} out of range for n={g.n}")
    if not p or len(set(p)) != len(p):
        return False
    if not all(g.has_edge(a, b) for a, b in zip(p, p[1:])):
        return False
    return not _chords(g, p)


def _valid_fast(masks: tuple[int, ...], paths: Sequence[Sequence[int]]) -> bool:
    """Bitmask check of a well-formed decomposition; False means "look closer"."""
    n = len(masks)
    seen = 0
    for p in paths:
        if len(p) < 2:
            return False
        pm = 0
        for v in p:
            if not 0 <= v < n:
                return False
            pm |= 1 << v
        if pm & seen or pm.bit_count() != len(p):
            return False
        seen |= pm
        last = len(p) - 1
        for i, v in enumerate(p):
            want = (1 << p[i - 1] if i else 0) | (1 << p[i + 1] if i < last else 0)
            if masks[v] & pm != want:
                return False
    return seen == (1 << n) - 1


def validate_ipd(g: Graph, d: InducedPathDecomposition | Iterable[Sequence[int]]) -> ValidationReport:
    """Check every IPD condition and report all violations found."""
    paths = d.paths if isinstance(d, InducedPathDecomposition) else [tuple(p) for p in d]
    if _valid_fast(g.masks, paths):
        return _OK
    found: list[Violation] = []
    owner: dict[int, int] = {}
    overlaps: list[Violation] = []
    for i, p in enumerate(paths):
        bad = tuple(v for v in p if not 0 <= v < g.n)
        if bad:
            found.append(Violation(i, "not-a-path", bad))
        else:
            repeated = tuple(sorted({v for v in p if p.count(v) > 1}))
            gaps = tuple(x for a, b in zip(p, p[1:]) if not g.has_edge(a, b) for x in (a, b))
            if repeated or gaps:
                found.append(Violation(i, "not-a-path", repeated + gaps))
            else:
                chords = _chords(g, p)
                if chords:
                    found.append(Violation(i, "not-induced", tuple(x for c in chords for x in c)))
        if len(p) < 2:
            found.append(Violation(i, "order-below-2", tuple(p)))
        shared = []
        for v in dict.fromkeys(p):
            if v in owner and owner[v] != i:
                shared.append(v)
            else:
                owner.setdefault(v, i)
        if shared:
            overlaps.append(Violation(i, "overlap", tuple(shared)))
    found.extend(overlaps)
    missing = tuple(v for v in range(g.n) if v not in owner)
    if missing:
        found.append(Violation(None, "uncovered-vertex", missing))
    return ValidationReport(tuple(found))


def _check_cap(what: str, n: int, cap: int | None) -> None:
    if cap is not None and n > cap:
        raise CapExceeded(what, n, cap)


def exists_ipd(g: Graph, cap: int | None = SOLVER_CAP) -> InducedPathDecomposition | None:
    """Exact IPD existence; returns a K2/P3 certificate or ``None``.

    Branches on the lowest uncovered vertex, trying in order: an edge to a
    neighbour, a P3 starting at it, a P3 centred on it. Uncovered sets that
    were shown infeasible are memoised.
    """
    _check_cap("exists_ipd", g.n, cap)
    masks = g.masks
    failed: set[int] = set()
    parts: list[VertexPath] = []

    def solve(unc: int) -> bool:
        if not unc:
            return True
        if unc in failed:
            return False
        r = unc
        while r:
            low = r & -r
            if not masks[low.bit_length() - 1] & unc:
                failed.add(unc)
                return False
            r ^= low
        vbit = unc & -unc
        v = vbit.bit_length() - 1
        near = masks[v] & unc
        for u in iter_bits(near):
            parts.append((v, u))
            if solve(unc & ~(vbit | 1 << u)):
                return True
            parts.pop()
        for u in iter_bits(near):
            for w in iter_bits(masks[u] & unc & ~masks[v] & ~vbit):
                parts.append((v, u, w))
                if solve(unc & ~(vbit | 1 << u | 1 << w)):
                    return True
                parts.pop()
        for u in iter_bits(near):
            for w in iter_bits(near & ~masks[u] & ~((2 << u) - 1)):
                parts.append((u, v, w))
                if solve(unc & ~(vbit | 1 << u | 1 << w)):
                    return True
                parts.pop()
        failed.add(unc)
        return False

    return InducedPathDecomposition(parts) if solve((1 << g.n) - 1) else None


def has_ipd(g: Graph, cap: int | None = SOLVER_CAP) -> bool:
    return exists_ipd(g, cap) is not None


def induced_paths_by_min_vertex(g: Graph) -> list[list[tuple[int, VertexPath]]]:
    """All induced paths on >= 2 vertices, grouped by their smallest vertex.

    Entry ``v`` lists ``(vertex mask, path)`` pairs, each path once, oriented
    so its first endpoint is smaller than its last, sorted by the path tuple.
    A path through ``v`` is two induced arms leaving ``v``; when ``v`` is
    interior the arm with the smaller first step is written first.
    """
    masks = g.masks

    def arms(seq: list[int], used: int, blocked: int, allowed: int, sink: list) -> None:
        # blocked: closed neighbourhoods of every arm vertex except the tip
        sink.append((tuple(seq), used))
        tip = seq[-1]
        for x in iter_bits(masks[tip] & allowed & ~used & ~blocked):
            seq.append(x)
            arms(seq, used | 1 << x, blocked | masks[tip] | 1 << tip, allowed, sink)
            seq.pop()

    out: list[list[tuple[int, VertexPath]]] = []
    for v in range(g.n):
        above = ~((2 << v) - 1)
        vbit = 1 << v
        first: list[tuple[VertexPath, int]] = []
        arms([v], vbit, 0, above, first)
        found = [(used, arm) for arm, used in first[1:]]
        for arm, used in first[1:]:
            tail = used & ~vbit
            forbidden = tail
            for x in iter_bits(tail):
                forbidden |= masks[x]
            allowed = above & ~forbidden
            second: list[tuple[VertexPath, int]] = []
            for x in iter_bits(masks[v] & allowed & ~((2 << arm[1]) - 1)):
                arms([v, x], vbit | 1 << x, masks[v] | vbit, allowed, second)
            for arm2, used2 in second:
                p = arm[::-1] + arm2[1:]
                found.append((used | used2, p if p[0] < p[-1] else p[::-1]))
        found.sort(key=lambda t: t[1])
        out.append(found)
    return out


def min_ipd(g: Graph, cap: int | None = RHO_CAP) -> tuple[int, InducedPathDecomposition] | None:
    """Minimum-size IPD, or ``None`` if ``g`` has none.

    Iterative deepening on the number of paths, starting from
    ``ceil(n / L)`` where ``L`` is the order of a longest induced path. At each
    node the lowest uncovered vertex is covered by every induced path through
    it in turn; a branch is cut when ``parts + ceil(uncovered / L)`` exceeds
    the budget. The first solution met is returned, so ties resolve to the
    lexicographically first choice sequence.
    """
    _check_cap("min_ipd", g.n, cap)
    if g.n == 0:
        return 0, InducedPathDecomposition(())
    witness = exists_ipd(g, cap=None)
    if witness is None:
        return None
    by_min = induced_paths_by_min_vertex(g)
    longest = max(len(p) for group in by_min for _, p in group)
    failed_budget: dict[int, int] = {}
    chosen: list[VertexPath] = []

    def solve(unc: int, budget: int) -> bool:
        if not unc:
            return True
        if -(-unc.bit_count() // longest) > budget or failed_budget.get(unc, -1) >= budget:
            return False
        v = (unc & -unc).bit_length() - 1
        for pm, p in by_min[v]:
            if pm & ~unc:
                continue
            chosen.append(p)
            if solve(unc & ~pm, budget - 1):
                return True
            chosen.pop()
        failed_budget[unc] = budget
        return False

    full = (1 << g.n) - 1
    for budget in range(-(-g.n // longest), len(witness) + 1):
        if solve(full, budget):
            return len(chosen), InducedPathDecomposition(chosen)
    raise AssertionError("unreachable: the existence certificate bounds the search")
