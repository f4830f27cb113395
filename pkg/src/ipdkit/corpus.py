"""Exhaustive and seeded verification suites over small-graph corpora.

Each suite walks a corpus in a fixed order (by order ``n``, then generator
order) and checks one structural claim per graph. The result carries pass and
fail counts and the first failing graph as a graph6 line, so any
counterexample can be replayed directly with the CLI.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field

from ipdkit import constructive, ekk, factor, generators, solver
from ipdkit.enumeration import connected_graphs
from ipdkit.errors import IpdError
from ipdkit.graph import Graph, find_hamiltonian_cycle
from ipdkit.io import emit_graph6
from ipdkit.structure import is_bad, is_odd_complete

log = logging.getLogger(__name__)

FIXTURES = ("k33", "heawood", "moebius_kantor", "pappus", "desargues")


@dataclass
class SuiteResult:
    suite: str
    checked: int = 0
    passed: int = 0
    failed: int = 0
    first_counterexample: str | None = None
    note: str | None = None
    stats: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, g: Graph, ok: bool, note: str = "") -> None:
        self.checked += 1
        if ok:
            self.passed += 1
            return
        self.failed += 1
        if self.first_counterexample is None:
            self.first_counterexample = emit_graph6(g)
            self.note = note or None

    def bump(self, key: str) -> None:
        self.stats[key] = self.stats.get(key, 0) + 1

    def to_document(self) -> dict:
        return {
            "suite": self.suite,
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "first_counterexample": self.first_counterexample,
            "note": self.note,
            "stats": dict(sorted(self.stats.items())),
        }


def fixture(name: str) -> Graph:
    if name == "k33":
        return generators.complete_bipartite(3, 3)
    return generators.generate("named", name)


def _by_order(lo: int, hi: int, **filters) -> Iterator[Graph]:
    for n in range(lo, hi + 1):
        log.info("enumerating n=%d %s", n, filters)
        yield from connected_graphs(n, **filters)


def _guarded(res: SuiteResult, g: Graph, check: Callable[[Graph], tuple[bool, str]]) -> None:
    try:
        ok, note = check(g)
    except IpdError as exc:  # invariant violations and unexpected refusals count as failures
        ok, note = False, f"{type(exc).__name__}: {exc}"
    res.record(g, ok, note)


def claw_free_suite(max_n: int = 9, min_n: int = 1) -> SuiteResult:
    """Claw-free graphs: block criterion, claw-free construction and exact solver agree."""
    res = SuiteResult("thm21")

    def check(g: Graph) -> tuple[bool, str]:
        decided = constructive.ipd_claw_free(g).has_ipd
        exact = solver.exists_ipd(g, cap=None) is not None
        blocks = not is_bad(g)
        res.bump("has_ipd" if exact else "no_ipd")
        return decided == exact == blocks, f"construct={decided} solver={exact} blocks={blocks}"

    for g in _by_order(min_n, max_n, claw_free=True):
        _guarded(res, g, check)
    return res


def regular_suite(max_n: int = 10, min_n: int = 1) -> SuiteResult:
    """Connected regular graphs: no IPD exactly for odd complete graphs.

    ``stats`` lists every graph without an IPD under ``no_ipd:<graph6>``.
    """
    res = SuiteResult("thm22")

    def check(g: Graph) -> tuple[bool, str]:
        exact = solver.exists_ipd(g, cap=None) is not None
        built = constructive.ipd_regular(g, hamiltonian_cap=None, solver_cap=None).has_ipd
        if not exact:
            res.bump(f"no_ipd:{emit_graph6(g)}")
        odd = is_odd_complete(g)
        return exact == built == (not odd), f"solver={exact} construct={built} odd_complete={odd}"

    for n in range(min_n, max_n + 1):
        for r in range(n):
            for g in connected_graphs(n, min_degree=r, max_degree=r):
                _guarded(res, g, check)
    return res


def hamiltonian_suite(max_n: int = 10, min_n: int = 3) -> SuiteResult:
    """Hamiltonian graphs: the cycle construction succeeds unless the graph is odd complete."""
    res = SuiteResult("thm23")

    def check(g: Graph) -> tuple[bool, str]:
        cycle = find_hamiltonian_cycle(g, cap=None)
        if cycle is None:
            res.bump("not_hamiltonian")
            return True, ""
        res.bump("hamiltonian")
        out = constructive.ipd_hamiltonian(g, cycle, cap=None)
        if out.has_ipd:
            return solver.validate_ipd(g, out.decomposition).ok, "invalid decomposition"
        return out.reason == constructive.ODD_COMPLETE and is_odd_complete(g), f"no IPD ({out.reason})"

    for g in _by_order(max(min_n, 3), max_n, min_degree=2):
        _guarded(res, g, check)
    for t in range(1, 5):
        g = generators.complete(2 * t + 1)
        out = constructive.ipd_hamiltonian(g, cap=None)
        res.record(g, not out.has_ipd and out.reason == constructive.ODD_COMPLETE, "odd complete graph")
    return res


def random_cubic_bipartite_corpus(count: int, seed: int, max_n: int = 20) -> list[Graph]:
    """``count`` connected cubic bipartite graphs with orders drawn from 6..max_n (even)."""
    rng = random.Random(seed)
    orders = list(range(6, max_n + 1, 2))
    return [generators.random_cubic_bipartite(rng.choice(orders), rng.randrange(2**32)) for _ in range(count)]


def cubic_bipartite_suite(
    count: int = 50, seed: int = 0, max_n: int = 20, rho_max_n: int = 14, fixtures: Iterable[str] = FIXTURES
) -> SuiteResult:
    """Cubic bipartite graphs: the factor construction yields at most ``n // 3`` paths.

    For ``n <= rho_max_n`` the size is also compared with the exact minimum.
    """
    res = SuiteResult("thm25")

    def check(g: Graph) -> tuple[bool, str]:
        d = constructive.ipd_cubic_bipartite(g, cap=None)
        if not solver.validate_ipd(g, d).ok or len(d) > g.n // 3:
            return False, f"{len(d)} paths for n={g.n}"
        if g.n <= rho_max_n:
            rho, _ = solver.min_ipd(g, cap=None)
            if len(d) < rho:
                return False, f"{len(d)} paths below the minimum {rho}"
        return True, ""

    graphs = [fixture(name) for name in fixtures] + random_cubic_bipartite_corpus(count, seed, max_n)
    for g in graphs:
        _guarded(res, g, check)
    return res


def factor_suite(max_n: int = 14, fixtures: Iterable[str] = FIXTURES) -> SuiteResult:
    """Every connected cubic bipartite graph has a 2-factor with all cycles of order >= 6."""
    res = SuiteResult("thm24")

    def check(g: Graph) -> tuple[bool, str]:
        f, stage = factor.c6_factor_search(g, cap=None)
        res.bump(f"stage{stage}")
        return factor.is_two_factor(g, f) and f.min_cycle >= 6, f"min cycle {f.min_cycle}"

    graphs: list[Graph] = [fixture(name) for name in fixtures]
    for g in graphs:
        _guarded(res, g, check)
    for g in _by_order(6, max_n, bipartite=True, min_degree=3, max_degree=3):
        _guarded(res, g, check)
    return res


def ekk_suite(max_n: int = 7, min_n: int = 1) -> SuiteResult:
    """Star partitions, the bad-component condition and the exact solver all agree."""
    res = SuiteResult("ekk-equivalence")

    def check(g: Graph) -> tuple[bool, str]:
        stars = ekk.star_partition(g, 2, cap=None) is not None
        condition = ekk.ekk_condition(g, 2, cap=None) is None
        exact = solver.exists_ipd(g, cap=None) is not None
        return stars == condition == exact, f"stars={stars} condition={condition} solver={exact}"

    for g in _by_order(min_n, max_n):
        _guarded(res, g, check)
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "thm21": claw_free_suite,
    "thm22": regular_suite,
    "thm23": hamiltonian_suite,
    "thm24": factor_suite,
    "thm25": cubic_bipartite_suite,
    "ekk-equivalence": ekk_suite,
}
