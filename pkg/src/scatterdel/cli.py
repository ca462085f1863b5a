"""Command-line front end.

Exactly one JSON document goes to stdout; diagnostics go to stderr.
Exit codes: 0 success with an answer, 1 infeasible decision (or failed
verification), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .approx import approx_solve
from .engine import solve_decision, solve_optimize
from .generate import GeneratorSpec, generate_planted
from .graphs import (
    EdgeListParseError,
    Graph,
    format_edge_list,
    graph_from_json,
    graph_to_json,
    parse_edge_list,
)
from .oracle import brute_force_opt, verify_solution
from .patterns import catalog_names, get_pattern
from .profiles import PROFILES, get_profile
from .recognizers import GRAPH_CLASSES, is_member, minimal_obstruction_peel

ORACLE_SIZE_LIMIT = 20


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> Graph:
    text = _read_text(path)
    if text.lstrip().startswith("{"):
        return graph_from_json(text)
    return parse_edge_list(text)


def _load_solution(path: str) -> list[int]:
    doc = json.loads(_read_text(path))
    if isinstance(doc, dict):
        doc = doc["solution"]
    return [int(v) for v in doc]


def _emit(doc: dict) -> None:
    json.dump(doc, sys.stdout)
    sys.stdout.write("\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scatterdel",
        description="Vertex deletion into scattered pairs of graph classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, profile=True, graph_input=True):
        if profile:
            p.add_argument("--profile", required=True, choices=sorted(PROFILES))
        if graph_input:
            p.add_argument("--input", required=True, help="edge-list or JSON file, '-' for stdin")
        p.add_argument("--json", action="store_true", help="JSON output (always on)")

    p = sub.add_parser("solve", help="decide whether k deletions suffice")
    add_common(p)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("optimize", help="minimum deletion set")
    add_common(p)

    p = sub.add_parser("approx", help="greedy packing approximation")
    add_common(p)

    p = sub.add_parser("verify", help="check a solution file")
    add_common(p)
    p.add_argument("--solution", required=True)

    p = sub.add_parser("oracle", help="brute-force optimum (small inputs)")
    add_common(p)
    p.add_argument("--k", type=int, default=None, help="search cap, default n")
    p.add_argument("--force", action="store_true", help="allow n above the safety limit")

    p = sub.add_parser("recognize", help="class membership plus a peeled witness")
    add_common(p, profile=False)
    p.add_argument("--class", dest="graph_class", required=True, choices=GRAPH_CLASSES)

    p = sub.add_parser("generate", help="planted feasible instance")
    p.add_argument("--profile", required=True, choices=sorted(PROFILES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--planted", type=int, default=0)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("dump-pattern", help="print a catalog pattern as an edge list")
    p.add_argument("name", help="pattern name, e.g. net, C7, dagger-aw-3")
    p.add_argument("--json", action="store_true")

    return parser


def run_cli(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0

    try:
        return _dispatch(args)
    except (EdgeListParseError, FileNotFoundError, KeyError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args: argparse.Namespace) -> int:
    cmd = args.command

    if cmd == "dump-pattern":
        pat = get_pattern(args.name)
        sys.stderr.write(f"known fixed patterns: {', '.join(catalog_names())}\n")
        doc = graph_to_json(pat.graph)
        doc["name"] = pat.name
        doc["edge_list"] = format_edge_list(pat.graph)
        _emit(doc)
        return 0

    if cmd == "generate":
        spec = GeneratorSpec(args.profile, args.n, args.planted, args.density, args.seed)
        g, planted = generate_planted(spec)
        doc = graph_to_json(g)
        doc.update({"profile": args.profile, "planted": planted, "seed": args.seed})
        _emit(doc)
        return 0

    if cmd == "recognize":
        g = _load_graph(args.input)
        member = is_member(g, args.graph_class)
        doc = {"class": args.graph_class, "member": member, "witness": None}
        if not member:
            doc["witness"] = minimal_obstruction_peel(g, args.graph_class)
        _emit(doc)
        return 0

    profile = get_profile(args.profile)
    g = _load_graph(args.input)

    if cmd == "solve":
        if args.k < 0:
            print("error: --k must be nonnegative", file=sys.stderr)
            return 2
        res = solve_decision(g, args.k, profile)
        _emit(res.to_json(profile.name))
        return 0 if res.feasible else 1

    if cmd == "optimize":
        res = solve_optimize(g, profile)
        _emit(res.to_json(profile.name))
        return 0

    if cmd == "approx":
        res = approx_solve(g, profile)
        _emit(res.to_json(profile.name))
        return 0

    if cmd == "verify":
        solution = _load_solution(args.solution)
        ok = verify_solution(g, solution, profile)
        _emit({"profile": profile.name, "solution": sorted(set(solution)), "valid": ok})
        return 0 if ok else 1

    if cmd == "oracle":
        if g.n > ORACLE_SIZE_LIMIT and not args.force:
            print(
                f"error: n={g.n} exceeds the oracle limit {ORACLE_SIZE_LIMIT}; pass --force",
                file=sys.stderr,
            )
            return 2
        cap = g.n if args.k is None else args.k
        got = brute_force_opt(g, profile, cap)
        if got is None:
            _emit({"profile": profile.name, "feasible": False, "cap": cap})
            return 1
        value, witness = got
        _emit({"profile": profile.name, "feasible": True, "value": value, "solution": witness})
        return 0

    raise AssertionError(f"unhandled command {cmd}")


def main(argv: list[str] | None = None) -> int:
    return run_cli(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
