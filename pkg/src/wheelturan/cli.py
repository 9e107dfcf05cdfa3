"""Command-line entry point.

Structured output is JSON on stdout; a one-line human summary goes to stderr.
Exit codes: 0 success, 1 check failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from collections.abc import Sequence

from wheelturan import __version__
from wheelturan.detect import WheelSpec, contains_wheel
from wheelturan.errors import WheelTuranError
from wheelturan.formula import WheelParams
from wheelturan.graph import (
    decode_graph6,
    encode_graph6,
    join,
    make_clique,
    make_complete_multipartite,
    make_cycle,
    make_turan_graph,
)
from wheelturan.proofcheck import ALL_CHECKS, run_grid
from wheelturan.turan import SearchConfig, exact_turan, heuristic_lower_bound

JOBS_ENV = "WHEELTURAN_JOBS"
REPORT_SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def default_jobs() -> int:
    env = os.environ.get(JOBS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"{JOBS_ENV} must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


def parse_range(text: str) -> list[int]:
    """``"2..12"`` -> [2, ..., 12]; ``"5"`` -> [5]."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
        else:
            lo_i = hi_i = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; expected A..B or A") from None
    if hi_i < lo_i:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(lo_i, hi_i + 1))


def parse_parts(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad part list {text!r}") from None


def _report(command: str, inputs: dict, result, t0: float, seed: int | None = None) -> dict:
    return {
        "schema_version": REPORT_SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "result": result,
        "elapsed_ms": int((time.perf_counter() - t0) * 1000),
        "tool_version": __version__,
        "seed": seed,
    }


def _emit(obj: dict, compact: bool = False) -> None:
    if compact:
        sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")
    else:
        sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


# -- commands ----------------------------------------------------------------


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "turan":
        _need(args, "n", "r")
        g = make_turan_graph(args.n, args.r)
    elif kind == "wheel":
        _need(args, "m", "t")
        g = join(make_clique(args.m), make_cycle(args.t))
    elif kind == "cycle":
        _need(args, "t")
        g = make_cycle(args.t)
    elif kind == "clique":
        _need(args, "s")
        g = make_clique(args.s)
    else:
        _need(args, "parts")
        g = make_complete_multipartite(args.parts)
    g6 = encode_graph6(g)
    sys.stdout.write(g6 + "\n")
    if args.sidecar:
        with open(args.sidecar, "w") as fh:
            json.dump({"kind": kind, "order": g.order, "edges": g.size, "graph6": g6}, fh, sort_keys=True)
            fh.write("\n")
    _say(f"{kind}: order {g.order}, {g.size} edges")
    return EXIT_OK


def _need(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"construct {args.kind} requires {', '.join(missing)}")


def _graph_lines(args) -> list[str]:
    if args.graph is not None:
        return [args.graph]
    if args.file is not None:
        with open(args.file) as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise UsageError("no graph6 input")
    return lines


def cmd_detect(args) -> int:
    spec = WheelSpec(args.m, args.t)
    lines = _graph_lines(args)
    graphs = [decode_graph6(ln) for ln in lines]
    hits = 0
    for line, g in zip(lines, graphs):
        t0 = time.perf_counter()
        w = contains_wheel(g, spec)
        result: dict = {"contains": w is not None, "order": g.order, "edges": g.size}
        if w is not None:
            hits += 1
            result["witness"] = w.to_json()
        inputs = {"graph6": line, "m": spec.m, "t": spec.t}
        _emit(_report("detect", inputs, result, t0), compact=True)
    _say(f"K_{spec.m} + C_{spec.t}: found in {hits} of {len(graphs)} graph(s)")
    return EXIT_OK


def cmd_exact(args) -> int:
    t0 = time.perf_counter()
    spec = WheelSpec(args.m, args.t)
    res = exact_turan(args.n, spec, jobs=args.jobs, allow_large=args.force_large)
    inputs = {"n": args.n, "m": args.m, "t": args.t, "force_large": args.force_large}
    _emit(_report("exact", inputs, res.to_json(), t0))
    _say(f"ex({args.n}, K_{spec.m} + C_{spec.t}) = {res.value} ({len(res.witnesses)} extremal class(es))")
    return EXIT_OK


def cmd_lower_bound(args) -> int:
    t0 = time.perf_counter()
    spec = WheelSpec(args.m, args.t)
    cfg = SearchConfig(
        budget=args.budget, restarts=args.restarts, seed=args.seed, target=args.target, patience=args.patience
    )
    lb = heuristic_lower_bound(args.n, spec, cfg, jobs=args.jobs)
    inputs = {
        "n": args.n,
        "m": args.m,
        "t": args.t,
        "budget": args.budget,
        "restarts": args.restarts,
        "target": args.target,
        "patience": args.patience,
    }
    _emit(_report("lower-bound", inputs, lb.to_json(), t0, seed=args.seed))
    _say(f"wheel-free graph with {lb.edges} edges on {args.n} vertices (seed {args.seed})")
    return EXIT_OK


def cmd_formula(args) -> int:
    t0 = time.perf_counter()
    params = WheelParams(args.m, args.k, args.n)
    _emit(_report("formula", {"n": args.n, "m": args.m, "k": args.k}, params.to_json(), t0))
    _say(f"value {params.value}, threshold {params.threshold}, in regime: {params.in_regime}")
    return EXIT_OK


def cmd_check_proof(args) -> int:
    t0 = time.perf_counter()
    report = run_grid(args.m, args.k, args.window, args.checks, jobs=args.jobs)
    inputs = {
        "m": [args.m[0], args.m[-1]],
        "k": [args.k[0], args.k[-1]],
        "window": args.window,
        "checks": args.checks or list(ALL_CHECKS),
    }
    _emit(_report("check-proof", inputs, report.to_json(), t0))
    for name, tally in report.checks.items():
        _say(f"{name}: {tally.passed} pass, {tally.failed} fail")
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wheelturan", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--jobs", type=int, default=None, help=f"worker processes (default: ${JOBS_ENV} or CPU count)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a standard graph as graph6")
    p.add_argument("kind", choices=["turan", "wheel", "cycle", "clique", "multipartite"])
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--parts", type=parse_parts, help="comma-separated part sizes")
    p.add_argument("--sidecar", help="write {order, edges} JSON to this path")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("detect", help="test graph6 input for K_m + C_t")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--graph", help="graph6 string")
    src.add_argument("--file", help="file with one graph6 per line")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("exact", help="exact ex(n, K_m + C_t) by exhaustive search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--force-large", action="store_true", help="allow n above the enumeration guard")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("lower-bound", help="seeded local search for a dense wheel-free graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--budget", type=int, default=SearchConfig.budget)
    p.add_argument("--restarts", type=int, default=SearchConfig.restarts)
    p.add_argument("--seed", type=int, default=SearchConfig.seed)
    p.add_argument("--target", type=int, default=None)
    p.add_argument("--patience", type=int, default=SearchConfig.patience)
    p.set_defaults(func=cmd_lower_bound)

    p = sub.add_parser("formula", help="closed-form value and threshold")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("check-proof", help="verify the induction arithmetic over a grid")
    p.add_argument("--m", type=parse_range, default=parse_range("2..12"))
    p.add_argument("--k", type=parse_range, default=parse_range("3..12"))
    p.add_argument("--window", type=int, default=300)
    p.add_argument(
        "--checks",
        type=lambda s: [c for c in s.split(",") if c],
        default=None,
        help=f"subset of {','.join(ALL_CHECKS)}",
    )
    p.set_defaults(func=cmd_check_proof)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.jobs is None:
            args.jobs = default_jobs()
        if args.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        return args.func(args)
    except (UsageError, WheelTuranError, OSError) as exc:
        _say(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
