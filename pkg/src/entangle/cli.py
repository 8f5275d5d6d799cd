"""``entangle`` command line: compute entanglement, run theorem suites, search obstructions.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .entanglement import entanglement, verify_strategy
from .errors import GraphDomainError, ParseError, SizeLimitError
from .game import Variant
from .graph import Graph, parse_edge_list, parse_graph6, read_graph6_lines
from .minors import SUITES, find_obstructions, plan_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


def _dump(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _read_graphs(args) -> list[Graph]:
    if args.edges is not None:
        return [parse_edge_list(args.edges.replace(";", "\n"))]
    if args.graph6 is not None:
        return [parse_graph6(args.graph6)]
    text = Path(args.input).read_text()
    fmt = args.format or ("edgelist" if args.input.endswith((".txt", ".edges")) else "graph6")
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    return list(read_graph6_lines(text))


def cmd_compute(args) -> int:
    for g in _read_graphs(args):
        res = entanglement(g)
        out = res.to_dict()
        if args.certify:
            out["certificate"] = verify_strategy(g, res.value, Variant.STANDARD, res.strategy).to_dict()
        if args.output == "json":
            print(_dump(out))
        else:
            print(f"n={g.n} directed={g.directed} entanglement={res.value}")
    return EXIT_OK


def cmd_verify(args) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    plans = [plan_suite(name, args.nmax, args.seed) for name in names]
    failures = total = 0
    pool = ProcessPoolExecutor(args.jobs) if args.jobs > 1 else None
    try:
        for plan in plans:
            batches = pool.map(plan.task, plan.items) if pool else map(plan.task, plan.items)
            for reports in batches:
                for rep in reports:
                    total += 1
                    failures += not rep.passed
                    print(rep.to_json(), flush=True)
    finally:
        if pool:
            pool.shutdown()
    print(f"{total} reports, {failures} failures", file=sys.stderr)
    return EXIT_FAIL if failures else EXIT_OK


def cmd_obstructions(args) -> int:
    graphs = None
    if args.input:
        graphs = read_graph6_lines(Path(args.input).read_text())
    obs = find_obstructions(args.k, args.nmax, graphs)
    manifest = obs.manifest()
    if args.output_dir:
        out = Path(args.output_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "obstructions.g6").write_text("".join(m + "\n" for m in manifest["members"]))
        (out / "manifest.json").write_text(_dump(manifest) + "\n")
    print(_dump(manifest))
    return EXIT_OK if obs.all_exactly_k_plus_1 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="entangle", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="entanglement of one graph (or each graph of a graph6 file)")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--edges", help="inline edge list; ';' may separate lines")
    src.add_argument("--graph6", help="inline graph6 string")
    src.add_argument("--input", help="file with an edge list or graph6 lines")
    p.add_argument("--format", choices=("graph6", "edgelist"))
    p.add_argument("--output", choices=("json", "text"), default="json")
    p.add_argument("--certify", action="store_true", help="also verify the certifying strategy")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run a theorem suite, JSON lines on stdout")
    p.add_argument("--suite", choices=SUITES + ("all",), required=True)
    p.add_argument("--nmax", type=int, default=5)
    p.add_argument("--seed", type=int, default=0, help="seed for the random lemma1 pairs")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("obstructions", help="minor-minimal graphs of entanglement > k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--nmax", type=int, default=5)
    p.add_argument("--input", help="graph6 file to search instead of the internal enumeration")
    p.add_argument("--output-dir", help="write obstructions.g6 and manifest.json here")
    p.set_defaults(func=cmd_obstructions)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, GraphDomainError, OSError) as exc:
        print(f"entangle: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeLimitError as exc:
        print(f"entangle: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
