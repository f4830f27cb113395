"""Text formats: graph6, edge lists and the JSON decomposition document."""

from __future__ import annotations

import json
from collections.abc import Sequence

from ipdkit.errors import ParseError
from ipdkit.graph import Graph

GRAPH6_HEADER = ">>graph6<<"
_SEXTETS = [format(i, "06b") for i in range(64)]


def _decode_size(data: bytes, start: int) -> tuple[int, int]:
    """Read the N(n) size field at ``data[start:]``; return (n, body offset)."""

    def need(k: int) -> None:
        if len(data) < start + k:
            raise ParseError("truncated size header", offset=len(data))

    need(1)
    if data[start] != 126:
        return data[start] - 63, start + 1
    need(2)
    if data[start + 1] != 126:
        need(4)
        width, body = 3, start + 1
    else:
        need(8)
        width, body = 6, start + 2
    n = 0
    for b in data[body : body + width]:
        n = (n << 6) | (b - 63)
    return n, body + width


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line (optionally prefixed with ``>>graph6<<``)."""
    data = text.encode("ascii", errors="replace") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n")
    start = len(GRAPH6_HEADER) if data.startswith(GRAPH6_HEADER.encode()) else 0
    if data[start:] and (min(data[start:]) < 63 or max(data[start:]) > 126):
        i = next(i for i in range(start, len(data)) if not 63 <= data[i] <= 126)
        raise ParseError(f"byte {data[i]!r} outside graph6 range 63..126", offset=i)
    n, pos = _decode_size(data, start)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise ParseError(f"expected {nbytes} body bytes for n={n}, got {len(body)}", offset=len(data))
    if len(body) > nbytes:
        raise ParseError("trailing garbage after graph6 body", offset=pos + nbytes)
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise ParseError("non-zero padding bits", offset=pos + nbytes - 1)

    # bit k of the upper triangle ends up at position k of ``x``
    x = int("".join([_SEXTETS[b - 63] for b in body])[::-1] or "0", 2)
    masks = [0] * n
    for j in range(1, n):
        col = x >> (j * (j - 1) // 2) & ((1 << j) - 1)
        if col:
            masks[j] = col
            bj = 1 << j
            while col:
                low = col & -col
                masks[low.bit_length() - 1] |= bj
                col ^= low
    return Graph._trusted(tuple(masks))


def emit_graph6(g: Graph, header: bool = False) -> str:
    n = g.n
    if n < 63:
        size = [n]
    elif n < 258048:
        size = [63, n >> 12 & 63, n >> 6 & 63, n & 63]
    else:
        size = [63, 63] + [n >> s & 63 for s in (30, 24, 18, 12, 6, 0)]
    out = [c + 63 for c in size]
    acc = nacc = 0
    for j in range(1, n):
        mj = g.masks[j]
        for i in range(j):
            acc = acc << 1 | (mj >> i & 1)
            nacc += 1
            if nacc == 6:
                out.append(acc + 63)
                acc = nacc = 0
    if nacc:
        out.append((acc << (6 - nacc)) + 63)
    return (GRAPH6_HEADER if header else "") + bytes(out).decode("ascii")


def _edge_list_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _read_edge_tokens(text: str) -> tuple[int | None, list[tuple[int, int, int]]]:
    header_n: int | None = None
    edges = []
    for lineno, tokens in _edge_list_lines(text):
        if tokens[0] == "n":
            if len(tokens) != 2 or header_n is not None or edges:
                raise ParseError("header must be a single leading 'n <count>' line", line=lineno)
            try:
                header_n = int(tokens[1])
            except ValueError:
                raise ParseError(f"non-integer vertex count {tokens[1]!r}", line=lineno) from None
            if header_n < 0:
                raise ParseError("negative vertex count", line=lineno)
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected two vertex ids, got {len(tokens)} tokens", line=lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer token in {' '.join(tokens)!r}", line=lineno) from None
        if u < 0 or v < 0:
            raise ParseError("negative vertex id", line=lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line=lineno)
        edges.append((lineno, u, v))
    return header_n, edges


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines. ``n = 1 + max id`` unless an ``n <count>`` header says otherwise.

    Duplicate edges are merged. Blank lines and ``#`` comments are ignored.
    """
    header_n, edges = _read_edge_tokens(text)
    n = 1 + max((max(u, v) for _, u, v in edges), default=-1)
    if header_n is not None:
        if header_n < n:
            bad = next(ln for ln, u, v in edges if max(u, v) >= header_n)
            raise ParseError(f"vertex id exceeds header count {header_n}", line=bad)
        n = header_n
    return Graph.from_edges(n, ((u, v) for _, u, v in edges))


def parse_edge_list_relabeled(text: str) -> tuple[Graph, dict[int, int]]:
    """Like :func:`parse_edge_list` but compacts sparse ids to ``0..n-1``.

    Ids are assigned in ascending order of the original ids. Returns the graph
    and the ``original -> dense`` mapping. A header count is ignored here.
    """
    _, edges = _read_edge_tokens(text)
    ids = sorted({x for _, u, v in edges for x in (u, v)})
    mapping = {v: i for i, v in enumerate(ids)}
    g = Graph.from_edges(len(ids), ((mapping[u], mapping[v]) for _, u, v in edges))
    return g, mapping


def emit_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str, fmt: str = "graph6") -> Graph:
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ParseError(f"expected exactly one graph6 line, got {len(lines)}")
        return parse_graph6(lines[0].strip())
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise ParseError(f"unknown graph format {fmt!r}")


def decomposition_document(n: int, paths: Sequence[Sequence[int]]) -> dict:
    return {"n": n, "paths": [list(p) for p in paths]}


def parse_decomposition(text: str) -> tuple[int, list[tuple[int, ...]]]:
    """Read a ``{"n": int, "paths": [[v, ...], ...]}`` document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", offset=exc.pos) from None
    if not isinstance(doc, dict) or not isinstance(doc.get("n"), int) or not isinstance(doc.get("paths"), list):
        raise ParseError('decomposition must be an object with integer "n" and list "paths"')
    if doc["n"] < 0:
        raise ParseError("vertex count must be non-negative")
    paths = []
    for p in doc["paths"]:
        if not isinstance(p, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in p):
            raise ParseError("each path must be a list of integers")
        paths.append(tuple(p))
    return doc["n"], paths
