"""Command-line front end: compute, generate, trace, witness, verify."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import families as fam
from .families import FamilySpec, ProductSpec
from .forcing import trace
from .graph import DisconnectedGraph, GraphError, VertexSet
from .harness import (
    DEFAULT_MAX_N,
    SUITES,
    SuiteConfig,
    format_table,
    load_allowlist,
    run_suite,
    unexpected_failures,
    write_jsonl,
)
from .io import from_graph6, read_graph, to_dot, to_edge_list, to_graph6
from .predictions import (
    ConstructionFailedVerification,
    expected_witness_size,
    grid_case,
    grid_witness,
    grid_witness_coords,
)
from .solvers import BudgetExceeded, InvariantKind, SolveBudget, UndefinedInvariant, solve

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_DISCONNECTED = 3
EXIT_BUDGET = 4
EXIT_INPUT = 5


class UsageError(Exception):
    pass


def parse_family(text: str) -> FamilySpec:
    """``name`` or ``name:a,b`` -> FamilySpec, e.g. ``grid:4,5``."""
    name, _, rest = text.partition(":")
    try:
        params = tuple(int(x) for x in rest.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"bad family parameters in {text!r}") from None
    return FamilySpec(name.strip(), params)


def parse_set(text: str) -> VertexSet:
    try:
        return VertexSet.of(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"bad vertex set {text!r}") from None


def _load(args):
    if args.g6 is not None:
        return from_graph6(args.g6)
    return read_graph(args.file)


def _add_graph_input(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--g6", help="graph in graph6 format")
    src.add_argument("--file", help="graph6 or edge-list file")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="domforce", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("compute", help="exact value of one invariant")
    p.add_argument("--invariant", required=True, choices=[k.value for k in InvariantKind])
    _add_graph_input(p)
    p.add_argument("--method", choices=["optimized", "oracle"], default="optimized")
    p.add_argument("--budget", type=int, default=None, help="max candidate sets to examine")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("generate", help="emit a family or product graph")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--family", choices=sorted(fam.FAMILY_ARITY))
    what.add_argument("--product", choices=fam.PRODUCT_KINDS)
    p.add_argument("--params", type=int, nargs="*", default=[])
    p.add_argument("--operands", nargs="+", default=[], help="family operands such as path:3 or petersen")
    p.add_argument("--k", type=int, default=1, help="iteration count for iterated_corona")
    p.add_argument("--root", type=int, default=0, help="root index for rooted_product")
    p.add_argument("--format", choices=["g6", "edges", "dot"], default="g6")

    p = sub.add_parser("trace", help="print the forcing chronicle of a set")
    _add_graph_input(p)
    p.add_argument("--set", required=True, help="comma-separated vertex indices")

    p = sub.add_parser("witness", help="constructive witnesses")
    p.add_argument("kind", choices=["grid"])
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--check", action="store_true")
    p.add_argument("--special-p4", action="store_true", help="use the unrepaired p = 4 special set")

    p = sub.add_parser("verify", help="run reproduction suites")
    p.add_argument("--suite", action="append", choices=list(SUITES) + ["all"], required=True)
    p.add_argument("--max-n", type=int, default=None, help="exact-search order cap for every chosen suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, default=5_000_000)
    p.add_argument("--json", dest="json_path", default=None, help="write JSON-lines report here")
    p.add_argument("--allowlist", default=None)
    p.add_argument("--no-timing", action="store_true", help="zero timings so reports are byte-stable")
    p.add_argument("--verbose", action="store_true")
    return ap


def cmd_compute(args) -> int:
    g = _load(args)
    kind = InvariantKind.parse(args.invariant)
    res = solve(g, kind, SolveBudget(max_candidates=args.budget), method=args.method)
    if args.json:
        print(json.dumps(res.to_dict(), sort_keys=True))
    else:
        print(res.value)
        print("witness:", " ".join(map(str, res.witness)))
    return EXIT_OK


def cmd_generate(args) -> int:
    if args.family:
        spec = FamilySpec(args.family, tuple(args.params))
    else:
        ops = tuple(parse_family(o) for o in args.operands)
        spec = ProductSpec(args.product, ops, k=args.k, root=args.root)
    g = fam.build(spec)
    if args.format == "g6":
        print(to_graph6(g))
    elif args.format == "edges":
        sys.stdout.write(to_edge_list(g))
    else:
        sys.stdout.write(to_dot(g))
    return EXIT_OK


def cmd_trace(args) -> int:
    g = _load(args)
    s = parse_set(args.set)
    if s.bits >> g.n:
        raise UsageError(f"set mentions a vertex >= n={g.n}")
    t = trace(g, s)
    for line in t.lines():
        print(line)
    print("final:", " ".join(map(str, t.final)))
    print("zero forcing" if t.final.bits == g.full else "not zero forcing")
    return EXIT_OK


def cmd_witness(args) -> int:
    p, q = sorted((args.p, args.q))
    coords = sorted(grid_witness_coords(p, q, special_p4=args.special_p4))
    print(f"grid({p},{q}) case {grid_case(p, q)}: {len(coords)} vertices "
          f"(expected {expected_witness_size(p, q)})")
    print(" ".join(f"({i},{j})" for i, j in coords))
    if args.check:
        try:
            grid_witness(p, q, special_p4=args.special_p4)
        except ConstructionFailedVerification as exc:
            print(f"FAILED: {exc}")
            return EXIT_MISMATCH
        print("verified")
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = SUITES if "all" in args.suite else tuple(dict.fromkeys(args.suite))
    max_n = dict(DEFAULT_MAX_N)
    if args.max_n is not None:
        max_n.update({s: args.max_n for s in suites})
    cfg = SuiteConfig(suites=suites, max_n=max_n, seed=args.seed, workers=args.workers,
                      budget=SolveBudget(max_candidates=args.budget), timing=not args.no_timing)
    records = run_suite(cfg)
    allow = load_allowlist(args.allowlist)
    if args.json_path:
        write_jsonl(records, args.json_path, timing=cfg.timing)
    print(format_table(records, allow, verbose=args.verbose))
    bad = unexpected_failures(records, allow)
    print(f"\n{len(records)} records, {len(bad)} unexpected failures")
    return EXIT_MISMATCH if bad else EXIT_OK


_COMMANDS = {
    "compute": cmd_compute,
    "generate": cmd_generate,
    "trace": cmd_trace,
    "witness": cmd_witness,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.cmd](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DisconnectedGraph as exc:
        print(f"error: disconnected graph: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphError, UndefinedInvariant, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
