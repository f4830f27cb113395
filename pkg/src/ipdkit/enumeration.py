"""Non-isomorphic enumeration of small connected graphs.

Graphs are grown one vertex at a time; at every size only one representative
per isomorphism class is kept, identified by :func:`canonical_rows`. Optional
filters (bipartite, claw-free, degree bounds) are applied during growth, which
is valid because each is inherited by a suitable one-vertex-smaller subgraph.

Two backends run the same algorithm: a pure-Python one, and a C program
(``_gen/gengraphs.c``) that is compiled on first use and is much faster. The
C backend needs a C compiler (``$CC`` or ``cc``); ``backend="auto"`` uses it
when it can be built and falls back to Python otherwise.
"""

from __future__ import annotations

import hashlib
import logging
import os
import shutil
import subprocess
import tempfile
from collections.abc import Iterator
from importlib import resources
from itertools import combinations
from pathlib import Path

from ipdkit.errors import ParameterError
from ipdkit.graph import Graph, iter_bits
from ipdkit.io import emit_graph6, parse_graph6

log = logging.getLogger(__name__)

MAX_N = 16


def _refine(cells: list[list[int]], masks: tuple[int, ...]) -> list[list[int]]:
    """Equitable refinement; a split cell is ordered by neighbour count, ascending."""
    changed = True
    while changed:
        changed = False
        for splitter in list(cells):
            smask = 0
            for v in splitter:
                smask |= 1 << v
            out = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((masks[v] & smask).bit_count(), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    out.extend(groups[c] for c in sorted(groups))
                    changed = True
            cells = out
            if changed:
                break
    return cells


def canonical_rows(g: Graph) -> tuple[int, ...]:
    """Adjacency rows of ``g`` under its canonical labelling.

    Two graphs are isomorphic iff their canonical rows are equal.
    """
    n = g.n
    masks = g.masks
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(masks[v].bit_count(), []).append(v)
    start = [by_degree[d] for d in sorted(by_degree)]
    best: list = [None, None]  # rows, labelling
    generators: list[list[int]] = []

    def leaf(order: list[int]) -> None:
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        rows = []
        for v in order:
            r = 0
            for u in iter_bits(masks[v]):
                r |= 1 << pos[u]
            rows.append(r)
        rows_t = tuple(rows)
        if best[0] is None or rows_t > best[0]:
            best[0], best[1] = rows_t, order
        elif rows_t == best[0]:
            gamma = [0] * n
            for a, b in zip(best[1], order):
                gamma[a] = b
            generators.append(gamma)

    def orbit_root(uf: list[int], x: int) -> int:
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    def search(cells: list[list[int]], prefix: list[int]) -> None:
        cells = _refine(cells, masks)
        idx = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if idx is None:
            leaf([c[0] for c in cells])
            return
        target = cells[idx]
        explored: list[int] = []
        for v in target:
            if explored:
                uf = list(range(n))
                for gamma in generators:
                    if all(gamma[p] == p for p in prefix):
                        for i in range(n):
                            a, b = orbit_root(uf, i), orbit_root(uf, gamma[i])
                            if a != b:
                                uf[a] = b
                rv = orbit_root(uf, v)
                if any(orbit_root(uf, u) == rv for u in explored):
                    continue
            rest = [u for u in target if u != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1 :], prefix + [v])
            explored.append(v)

    if n:
        search(start, [])
        return best[0]
    return ()


def canonical_form(g: Graph) -> Graph:
    return Graph._trusted(canonical_rows(g))


def _python_connected(
    n: int, bipartite: bool, claw_free: bool, min_degree: int, max_degree: int
) -> Iterator[Graph]:
    if min_degree > n - 1:
        return
    level: list[tuple[int, ...]] = [(0,)]
    if n == 1:
        if min_degree <= 0:
            yield Graph._trusted((0,))
        return
    for k in range(2, n + 1):
        need = min_degree - (n - k)
        seen: set[tuple[int, ...]] = set()
        nxt: list[tuple[int, ...]] = []
        pk = k - 1
        for par in level:
            degs = [m.bit_count() for m in par]
            eligible = [v for v in range(pk) if degs[v] < max_degree]
            forced = [v for v in range(pk) if degs[v] < need]
            if any(degs[v] >= max_degree for v in forced):
                continue
            free = [v for v in eligible if v not in forced]
            side0 = _colour_class(par) if bipartite else 0
            for size in range(len(free) + 1):
                for extra in combinations(free, size):
                    s = 0
                    for v in (*forced, *extra):
                        s |= 1 << v
                    deg = s.bit_count()
                    if not s or deg > max_degree or deg < need:
                        continue
                    if bipartite and s & side0 and s & ~side0:
                        continue
                    if claw_free and not _claw_free_with_new(par, s):
                        continue
                    child = tuple(m | (1 << pk if s >> v & 1 else 0) for v, m in enumerate(par)) + (s,)
                    rows = canonical_rows(Graph._trusted(child))
                    if rows not in seen:
                        seen.add(rows)
                        nxt.append(rows)
        level = nxt
    for rows in level:
        yield Graph._trusted(rows)


def _colour_class(masks: tuple[int, ...]) -> int:
    side0, frontier, seen, colour = 1, 1, 1, 0
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= masks[v]
        frontier = nxt & ~seen
        seen |= frontier
        colour ^= 1
        if colour == 0:
            side0 |= frontier
    return side0


def _claw_free_with_new(par: tuple[int, ...], s: int) -> bool:
    nb = list(iter_bits(s))
    for x, y, z in combinations(nb, 3):
        if not (par[x] >> y & 1 or par[x] >> z & 1 or par[y] >> z & 1):
            return False
    for c in nb:
        others = par[c] & ~s
        for y in iter_bits(others):
            if others & ~par[y] & ~(1 << y):
                return False
    return True


def _cache_dir() -> Path:
    root = os.environ.get("IPDKIT_CACHE") or os.path.join(
        os.environ.get("XDG_CACHE_HOME") or os.path.expanduser("~/.cache"), "ipdkit"
    )
    return Path(root)


def generator_binary() -> Path | None:
    """Path to the compiled C generator, building it if needed; ``None`` if impossible."""
    source = resources.files("ipdkit").joinpath("_gen/gengraphs.c").read_bytes()
    digest = hashlib.sha256(source).hexdigest()[:12]
    target = _cache_dir() / f"gengraphs-{digest}"
    if target.exists():
        return target
    cc = os.environ.get("CC") or shutil.which("cc") or shutil.which("gcc")
    if cc is None:
        return None
    target.parent.mkdir(parents=True, exist_ok=True)
    with tempfile.TemporaryDirectory() as tmp:
        src = Path(tmp) / "gengraphs.c"
        src.write_bytes(source)
        out = Path(tmp) / "gengraphs"
        proc = subprocess.run([cc, "-O2", "-o", str(out), str(src)], capture_output=True, text=True)
        if proc.returncode != 0:
            log.warning("could not compile graph generator: %s", proc.stderr.strip())
            return None
        os.replace(out, target)
    return target


def iter_graph6(
    n: int,
    *,
    bipartite: bool = False,
    claw_free: bool = False,
    min_degree: int = 0,
    max_degree: int | None = None,
    backend: str = "auto",
) -> Iterator[str]:
    """graph6 strings of the connected graphs on ``n`` vertices passing the filters."""
    if not 1 <= n <= MAX_N:
        raise ParameterError(f"enumeration supports 1 <= n <= {MAX_N}")
    if backend not in ("auto", "c", "python"):
        raise ParameterError(f"unknown backend {backend!r}")
    dmax = n if max_degree is None else max_degree
    binary = None if backend == "python" else generator_binary()
    if binary is None:
        if backend == "c":
            raise ParameterError("C generator unavailable (no working compiler)")
        for g in _python_connected(n, bipartite, claw_free, min_degree, dmax):
            yield emit_graph6(g)
        return
    args = [str(binary)]
    if bipartite:
        args.append("-b")
    if claw_free:
        args.append("-F")
    args += ["-d", str(min_degree), "-D", str(dmax), str(n)]
    with subprocess.Popen(args, stdout=subprocess.PIPE, text=True) as proc:
        assert proc.stdout is not None
        for line in proc.stdout:
            yield line.rstrip("\n")
    if proc.returncode != 0:
        raise RuntimeError(f"graph generator exited with status {proc.returncode}")


def connected_graphs(n: int, **filters) -> Iterator[Graph]:
    """Connected graphs on ``n`` vertices, one per isomorphism class; see :func:`iter_graph6`."""
    for line in iter_graph6(n, **filters):
        yield parse_graph6(line)
