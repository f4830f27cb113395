"""Constructions of induced path decompositions for structured graph classes.

* claw-free graphs: an IPD exists iff some block is not an odd complete graph;
* regular graphs: an IPD exists unless the graph is an odd complete graph;
* Hamiltonian graphs: explicit path sets built along a Hamiltonian cycle;
* cubic bipartite graphs: at most ``n // 3`` paths, cut from the cycles of a
  2-factor whose cycles all have order >= 6.

Every decomposition produced here is re-validated before it is returned; a
failure on a path that should always succeed raises InvariantViolation.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass

from ipdkit import factor, solver
from ipdkit.errors import InvariantViolation, PreconditionError
from ipdkit.graph import (
    HAMILTONIAN_CAP,
    Graph,
    VertexCycle,
    VertexPath,
    bipartition,
    find_hamiltonian_cycle,
    is_connected,
    is_cycle,
    regular_degree,
)
from ipdkit.solver import InducedPathDecomposition, validate_ipd
from ipdkit.structure import find_claw, is_bad, is_odd_complete

ODD_COMPLETE = "odd-complete"
ALL_BLOCKS_ODD_COMPLETE = "all-blocks-odd-complete"


@dataclass(frozen=True)
class ConstructResult:
    """Either a decomposition or the reason none exists.

    ``method`` names the route that produced the answer.
    """

    decomposition: InducedPathDecomposition | None = None
    reason: str | None = None
    method: str = ""

    @property
    def has_ipd(self) -> bool:
        return self.decomposition is not None


def _checked(g: Graph, paths: Sequence[Sequence[int]], method: str) -> ConstructResult:
    d = InducedPathDecomposition(paths)
    report = validate_ipd(g, d)
    if not report.ok:
        raise InvariantViolation(f"{method} produced an invalid decomposition: {report.violations}")
    return ConstructResult(decomposition=d, method=method)


def _require_connected(g: Graph) -> None:
    if g.n == 0 or not is_connected(g):
        raise PreconditionError("graph must be non-empty and connected")


def ipd_claw_free(g: Graph, solver_cap: int | None = solver.SOLVER_CAP) -> ConstructResult:
    """Decide IPD existence for a connected claw-free graph.

    The answer follows from the block structure alone. When an IPD exists the
    decomposition itself comes from the exact solver, since no direct
    construction is known for this class.
    """
    _require_connected(g)
    claw = find_claw(g)
    if claw is not None:
        raise PreconditionError(f"graph has a claw centred at {claw.center} with leaves {claw.leaves}")
    if is_bad(g):
        return ConstructResult(reason=ALL_BLOCKS_ODD_COMPLETE, method="claw-free")
    d = solver.exists_ipd(g, cap=solver_cap)
    if d is None:
        raise InvariantViolation("claw-free graph with a non-odd-complete block has no IPD")
    return _checked(g, d.paths, "claw-free")


def _pairs(seq: Sequence[int]) -> list[VertexPath]:
    return [(seq[i], seq[i + 1]) for i in range(0, len(seq), 2)]


def _hamiltonian_candidates(cycle: VertexCycle) -> Iterator[list[VertexPath]]:
    """Candidate decompositions of an odd cycle whose short chords are all present.

    For each rotation and orientation, with ``v(1)`` the first vertex:
    missing ``v1 v(2i+1)`` gives ``v1 v(2i-1) v(2i+1)`` plus pairs;
    missing ``v1 v(2i)`` gives ``v1 v(2i-1) v(2i)`` plus pairs.
    """
    n = len(cycle)
    t = (n - 1) // 2
    for r in range(n):
        for step in (1, -1):

            def v(k: int) -> int:
                return cycle[(r + step * (k - 1)) % n]

            for i in range(2, t + 1):
                yield (
                    [(v(1), v(2 * i - 1), v(2 * i + 1))]
                    + _pairs([v(k) for k in range(2, 2 * i - 2)])
                    + [(v(2 * i - 2), v(2 * i))]
                    + _pairs([v(k) for k in range(2 * i + 2, n + 1)])
                )
            for i in range(2, t + 1):
                yield (
                    [(v(1), v(2 * i - 1), v(2 * i))]
                    + _pairs([v(k) for k in range(3, 2 * i - 1)])
                    + _pairs([v(k) for k in range(2 * i + 1, n)])
                    + [(v(n), v(2))]
                )


def ipd_hamiltonian(
    g: Graph, cycle: Sequence[int] | None = None, cap: int | None = HAMILTONIAN_CAP
) -> ConstructResult:
    """IPD of a Hamiltonian graph, read off a Hamiltonian cycle.

    Even order: alternate cycle edges. Odd order ``2t+1``: a missing chord
    ``v(i) v(i+2)`` yields a P3 plus a matching along the rest of the cycle.
    Otherwise the two chord families of :func:`_hamiltonian_candidates` are
    tried over all rotations and both orientations; if every candidate fails
    the graph must be complete, and that is asserted.
    """
    _require_connected(g)
    if cycle is None:
        found = find_hamiltonian_cycle(g, cap=cap)
        if found is None:
            raise PreconditionError("graph has no Hamiltonian cycle")
        cycle = found
    cycle = tuple(cycle)
    if len(cycle) != g.n or not is_cycle(g, cycle):
        raise PreconditionError("supplied sequence is not a Hamiltonian cycle of the graph")
    n = g.n
    if n % 2 == 0:
        return _checked(g, _pairs(cycle), "hamiltonian")
    for i in range(n):
        a, b, c = cycle[i], cycle[(i + 1) % n], cycle[(i + 2) % n]
        if not g.has_edge(a, c):
            rest = [cycle[(i + k) % n] for k in range(3, n)]
            return _checked(g, [(a, b, c)] + _pairs(rest), "hamiltonian")
    for paths in _hamiltonian_candidates(cycle):
        if validate_ipd(g, paths).ok:
            return _checked(g, paths, "hamiltonian")
    if not is_odd_complete(g):
        raise InvariantViolation("every Hamiltonian candidate failed on a non-complete graph")
    return ConstructResult(reason=ODD_COMPLETE, method="hamiltonian")


def ipd_regular(
    g: Graph,
    hamiltonian_cap: int | None = HAMILTONIAN_CAP,
    solver_cap: int | None = solver.SOLVER_CAP,
) -> ConstructResult:
    """IPD of a connected regular graph; only odd complete graphs have none.

    Uses a Hamiltonian cycle when one is found within ``hamiltonian_cap``,
    otherwise the exact solver. Exceeding ``solver_cap`` raises CapExceeded:
    the case stays undecided rather than being reported as having no IPD.
    """
    _require_connected(g)
    if regular_degree(g) is None:
        raise PreconditionError("graph is not regular")
    if is_odd_complete(g):
        return ConstructResult(reason=ODD_COMPLETE, method="regular")
    if hamiltonian_cap is None or g.n <= hamiltonian_cap:
        cycle = find_hamiltonian_cycle(g, cap=hamiltonian_cap)
        if cycle is not None:
            res = ipd_hamiltonian(g, cycle)
            if not res.has_ipd:
                raise InvariantViolation("Hamiltonian route found no IPD for a non-odd-complete graph")
            return ConstructResult(res.decomposition, method="regular/hamiltonian")
    d = solver.exists_ipd(g, cap=solver_cap)
    if d is None:
        raise InvariantViolation("connected regular graph that is not odd complete has no IPD")
    return _checked(g, d.paths, "regular/solver")


def _triples(seq: Sequence[int]) -> list[VertexPath]:
    return [tuple(seq[i : i + 3]) for i in range(0, len(seq), 3)]


def _factor_cycle_candidates(t: int) -> list[Callable[[Callable[[int], int]], list[VertexPath]]]:
    """Candidate splits of a cycle of order ``t``, as functions of ``v(1..t)``."""
    k = t // 3

    def run(v: Callable[[int], int], lo: int, hi: int) -> list[int]:
        return [v(i) for i in range(lo, hi + 1)]

    if t % 3 == 0:
        return [lambda v: _triples(run(v, 1, t))]
    if t % 3 == 1:
        return [lambda v: [tuple(run(v, 1, 4))] + _triples(run(v, 5, t))]
    cands = []
    if k >= 2:
        cands.append(lambda v: [tuple(run(v, 1, 4)), tuple(run(v, 5, 8))] + _triples(run(v, 9, t)))
    cands.append(
        lambda v: [(v(t - 2), v(t - 1), v(t), v(1)), tuple(run(v, 2, 5))] + _triples(run(v, 6, t - 3))
    )
    cands.append(lambda v: [(v(t - 2), v(t - 1), v(t), v(1), v(2))] + _triples(run(v, 3, t - 3)))
    return cands


def decompose_factor_cycle(g: Graph, cycle: Sequence[int]) -> list[VertexPath]:
    """Split the vertices of one factor cycle into ``t // 3`` paths induced in ``g``.

    ``t = 3k``: consecutive triples. ``t = 3k+1``: one P4 then triples.
    ``t = 3k+2``: two P4s, or a P4 wrapping through ``v1`` plus a P4, or a P5
    wrapping through ``v1``, each followed by triples. Rotations and both
    orientations are swept; the first candidate induced in ``g`` wins.
    """
    if regular_degree(g) != 3 or bipartition(g) is None:
        raise PreconditionError("host graph must be cubic and bipartite")
    cycle = tuple(cycle)
    t = len(cycle)
    if t % 2:
        raise PreconditionError(f"odd cycle of order {t} cannot occur in a bipartite graph")
    if t < 6 or not is_cycle(g, cycle):
        raise PreconditionError("expected a cycle of the graph with at least 6 vertices")
    candidates = _factor_cycle_candidates(t)
    for r in range(t):
        for step in (1, -1):
            for make in candidates:
                paths = make(lambda i: cycle[(r + step * (i - 1)) % t])
                if all(solver.is_induced_path(g, p) for p in paths):
                    return paths
    raise InvariantViolation(f"no induced split found for a factor cycle of order {t}")


def ipd_cubic_bipartite(g: Graph, cap: int | None = factor.ENUMERATION_CAP) -> InducedPathDecomposition:
    """IPD with at most ``n // 3`` paths for a connected cubic bipartite graph."""
    f = factor.c6_factor(g, cap=cap)
    paths = [p for c in f.cycles for p in decompose_factor_cycle(g, c)]
    d = _checked(g, paths, "cubic-bipartite").decomposition
    if len(d) > g.n // 3:
        raise InvariantViolation(f"{len(d)} paths exceed n/3 for n={g.n}")
    return d
