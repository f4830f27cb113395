"""``ipdkit`` command line.

Exit status: 0 decided/ok, 1 bad input or unmet hypothesis (or a failed
check), 2 a size cap refused the computation, 3 an internal invariant broke.
Structured output is one JSON object per run with sorted keys, so identical
inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import inspect
import json
import logging
import sys
from collections.abc import Sequence

from ipdkit import __version__, constructive, corpus, ekk, factor, generators, solver
from ipdkit.enumeration import iter_graph6
from ipdkit.errors import CapExceeded, InvariantViolation, IpdError, ParseError
from ipdkit.graph import HAMILTONIAN_CAP, Graph, bipartition, find_hamiltonian_cycle, is_connected, regular_degree
from ipdkit.io import emit_edge_list, emit_graph6, parse_decomposition, parse_graph
from ipdkit.structure import find_claw

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_INVARIANT = 0, 1, 2, 3
STRATEGIES = ("auto", "hamiltonian", "cubic-bipartite", "claw-free", "regular")


class CheckFailed(Exception):
    """The command ran but its check did not pass; the report is already printed."""


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("caps must be positive")
    return value


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(args: argparse.Namespace) -> Graph:
    if (args.input is None) == (args.g6 is None):
        raise ParseError("give exactly one input: a path (or '-') or --g6")
    if args.g6 is not None:
        return parse_graph(args.g6, "graph6")
    return parse_graph(_read_text(args.input), args.format)


def _paths_doc(n: int, d: solver.InducedPathDecomposition | None) -> dict | None:
    return None if d is None else d.to_document(n)


def _stars_as_paths(p: ekk.StarPartition) -> list[tuple[int, ...]]:
    out = []
    for s in p.parts:
        out.append((s.center, s.leaves[0]) if len(s.leaves) == 1 else (s.leaves[0], s.center, s.leaves[1]))
    return out


def cmd_decide(args: argparse.Namespace, g: Graph) -> dict:
    if args.via == "ekk":
        cap = args.cap_ekk or ekk.STAR_CAP
        stars = ekk.star_partition(g, 2, cap=cap)
        doc = {"has_ipd": stars is not None, "method": "ekk", "certificate": None, "witness": None}
        if stars is not None:
            doc["certificate"] = solver.InducedPathDecomposition(_stars_as_paths(stars)).to_document(g.n)
        elif g.n <= (args.cap_ekk or ekk.CONDITION_CAP):
            w = ekk.ekk_condition(g, 2, cap=None)
            doc["witness"] = None if w is None else w.to_document()
        return doc
    cap = args.cap_solver or solver.SOLVER_CAP
    if args.via == "auto" and g.n and is_connected(g) and find_claw(g) is None:
        res = constructive.ipd_claw_free(g, solver_cap=cap)
        return {
            "has_ipd": res.has_ipd,
            "method": "claw-free",
            "certificate": _paths_doc(g.n, res.decomposition),
            "reason": res.reason,
        }
    d = solver.exists_ipd(g, cap=cap)
    return {"has_ipd": d is not None, "method": "solver", "certificate": _paths_doc(g.n, d)}


def _construct_auto(args: argparse.Namespace, g: Graph) -> constructive.ConstructResult:
    if g.n and is_connected(g) and regular_degree(g) == 3 and bipartition(g) is not None:
        d = constructive.ipd_cubic_bipartite(g, cap=args.cap_solver or factor.ENUMERATION_CAP)
        return constructive.ConstructResult(d, method="cubic-bipartite")
    ham_cap = args.cap_ham or HAMILTONIAN_CAP
    if g.n and g.n <= ham_cap and is_connected(g):
        cycle = find_hamiltonian_cycle(g, cap=ham_cap)
        if cycle is not None:
            return constructive.ipd_hamiltonian(g, cycle)
    d = solver.exists_ipd(g, cap=args.cap_solver or solver.SOLVER_CAP)
    return constructive.ConstructResult(d, reason=None if d else "no-ipd", method="solver")


def cmd_construct(args: argparse.Namespace, g: Graph) -> dict:
    s = args.strategy
    if s == "auto":
        res = _construct_auto(args, g)
    elif s == "hamiltonian":
        res = constructive.ipd_hamiltonian(g, cap=args.cap_ham or HAMILTONIAN_CAP)
    elif s == "cubic-bipartite":
        d = constructive.ipd_cubic_bipartite(g, cap=args.cap_solver or factor.ENUMERATION_CAP)
        res = constructive.ConstructResult(d, method="cubic-bipartite")
    elif s == "claw-free":
        res = constructive.ipd_claw_free(g, solver_cap=args.cap_solver or solver.SOLVER_CAP)
    else:
        res = constructive.ipd_regular(
            g, hamiltonian_cap=args.cap_ham or HAMILTONIAN_CAP, solver_cap=args.cap_solver or solver.SOLVER_CAP
        )
    return {
        "strategy": s,
        "method": res.method,
        "has_ipd": res.has_ipd,
        "size": None if res.decomposition is None else len(res.decomposition),
        "decomposition": _paths_doc(g.n, res.decomposition),
        "reason": res.reason,
    }


def cmd_rho(args: argparse.Namespace, g: Graph) -> dict:
    out = solver.min_ipd(g, cap=args.cap_solver or solver.RHO_CAP)
    if out is None:
        return {"has_ipd": False, "rho": None, "certificate": None}
    rho, d = out
    return {"has_ipd": True, "rho": rho, "certificate": d.to_document(g.n)}


def cmd_verify(args: argparse.Namespace, g: Graph) -> dict:
    n, paths = parse_decomposition(_read_text(args.decomposition))
    if n != g.n:
        raise ParseError(f"decomposition is for n={n} but the graph has n={g.n}")
    report = solver.validate_ipd(g, paths)
    doc = report.to_document()
    if not report.ok:
        raise CheckFailed(doc)
    return doc


def cmd_corpus(args: argparse.Namespace) -> dict:
    run = corpus.SUITES[args.suite]
    wanted = {
        "max_n": args.max_n,
        "min_n": args.min_n,
        "count": args.count,
        "seed": args.seed,
    }
    accepted = inspect.signature(run).parameters
    kwargs = {k: v for k, v in wanted.items() if v is not None and k in accepted}
    result = run(**kwargs)
    doc = result.to_document()
    if not result.ok:
        raise CheckFailed(doc)
    return doc


def _coerce(token: str) -> int | str:
    try:
        return int(token)
    except ValueError:
        return token


def cmd_generate(args: argparse.Namespace) -> dict:
    params = [_coerce(p) for p in args.params]
    arity = {"random_regular": 3, "random_cubic_bipartite": 2}
    if args.family in arity and len(params) == arity[args.family] - 1:
        params.append(args.seed or 0)
    g = generators.generate(args.family, *params)
    return {"family": args.family, "params": params, "n": g.n, "graph": _emit(g, args.format)}


def cmd_enumerate(args: argparse.Namespace) -> dict:
    lines = list(
        iter_graph6(
            args.n,
            bipartite=args.bipartite,
            claw_free=args.claw_free,
            min_degree=args.min_degree,
            max_degree=args.max_degree,
        )
    )
    return {"n": args.n, "count": len(lines), "graphs": lines}


def _emit(g: Graph, fmt: str) -> str:
    return emit_graph6(g) if fmt == "graph6" else emit_edge_list(g)


def _human(command: str, doc: dict) -> str:
    if "error" in doc:
        return f"error: {doc['error']['message']}"
    if command == "generate":
        return doc["graph"].rstrip("\n")
    if command == "enumerate":
        return "\n".join(doc["graphs"]) if doc["graphs"] else f"no graphs for n={doc['n']}"
    if command == "corpus":
        line = f"{doc['suite']}: {doc['passed']}/{doc['checked']} passed, {doc['failed']} failed"
        if doc["first_counterexample"]:
            line += f"\nfirst counterexample: {doc['first_counterexample']}"
            if doc["note"]:
                line += f"  ({doc['note']})"
        return line
    if command == "verify":
        if doc["ok"]:
            return "ok"
        return "\n".join(
            f"violation: {v['kind']} path={v['path']} vertices={v['vertices']}" for v in doc["violations"]
        )
    lines = []
    if command == "rho":
        lines.append(f"rho = {doc['rho']}" if doc["has_ipd"] else "no IPD")
    else:
        lines.append(f"has IPD: {'yes' if doc['has_ipd'] else 'no'} (method: {doc['method']})")
        if doc.get("reason"):
            lines.append(f"reason: {doc['reason']}")
    cert = doc.get("certificate") or doc.get("decomposition")
    if cert:
        lines.extend(" ".join(map(str, p)) for p in cert["paths"])
    if doc.get("witness"):
        lines.append(f"witness S={doc['witness']['S']} bad components={doc['witness']['bad_components']}")
    return "\n".join(lines)


def _print(args: argparse.Namespace, doc: dict) -> None:
    if args.output == "structured":
        sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        sys.stdout.write(_human(args.command, doc) + "\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    common.add_argument("--cap-solver", type=_positive, default=None, metavar="N")
    common.add_argument("--cap-ekk", type=_positive, default=None, metavar="N")
    common.add_argument("--cap-ham", type=_positive, default=None, metavar="N")
    common.add_argument("--seed", type=int, default=None, metavar="N")
    common.add_argument("--output", choices=("human", "structured"), default="human")
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")

    parser = argparse.ArgumentParser(prog="ipdkit", description="Induced path decompositions of small graphs.")
    parser.add_argument("--version", action="version", version=f"ipdkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("input", nargs="?", help="graph file, or '-' for stdin")
        p.add_argument("--g6", metavar="STRING", help="inline graph6 instead of a file")
        return p

    p = graph_command("decide", "does the graph have an IPD?")
    p.add_argument("--via", choices=("auto", "solver", "ekk"), default="auto")
    p = graph_command("construct", "build an IPD with a structural construction")
    p.add_argument("--strategy", choices=STRATEGIES, default="auto")
    graph_command("rho", "minimum number of paths in an IPD")
    p = graph_command("verify", "check a decomposition document against a graph")
    p.add_argument("--decomposition", "-d", required=True, metavar="FILE")

    p = sub.add_parser("corpus", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=sorted(corpus.SUITES))
    p.add_argument("--max-n", type=_positive)
    p.add_argument("--min-n", type=_positive)
    p.add_argument("--count", type=int, help="random graphs (cubic bipartite suite)")

    p = sub.add_parser("generate", parents=[common], help="emit a graph from a named family")
    p.add_argument("family", choices=sorted(generators.FAMILIES))
    p.add_argument("params", nargs="*")

    p = sub.add_parser("enumerate", parents=[common], help="all connected graphs of one order")
    p.add_argument("n", type=_positive)
    p.add_argument("--bipartite", action="store_true")
    p.add_argument("--claw-free", action="store_true")
    p.add_argument("--min-degree", type=int, default=0)
    p.add_argument("--max-degree", type=int, default=None)
    return parser


GRAPH_COMMANDS = {"decide": cmd_decide, "construct": cmd_construct, "rho": cmd_rho, "verify": cmd_verify}
OTHER_COMMANDS = {"corpus": cmd_corpus, "generate": cmd_generate, "enumerate": cmd_enumerate}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command in GRAPH_COMMANDS:
            doc = GRAPH_COMMANDS[args.command](args, _load_graph(args))
        else:
            doc = OTHER_COMMANDS[args.command](args)
    except CheckFailed as failed:
        _print(args, failed.args[0])
        return EXIT_INPUT
    except CapExceeded as exc:
        return _fail(args, exc, EXIT_CAP)
    except InvariantViolation as exc:
        return _fail(args, exc, EXIT_INVARIANT)
    except IpdError as exc:
        return _fail(args, exc, EXIT_INPUT)
    _print(args, doc)
    return EXIT_OK


def _fail(args: argparse.Namespace, exc: Exception, status: int) -> int:
    doc = {"error": {"kind": type(exc).__name__, "message": str(exc)}, "exit": status}
    if args.output == "structured":
        _print(args, doc)
    print(f"ipdkit: {exc}", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
