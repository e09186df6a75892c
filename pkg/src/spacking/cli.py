"""Command-line interface.

Exit codes: 0 success / feasible / valid / all PASS, 1 infeasible / invalid /
some FAIL, 2 usage error, 3 node budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .bounds import clique_check, lb_ddist, ub_ddist
from .core import MAX_D, CirculantSpec, DistanceSpec, WidthSequence, conflict_offsets, dist_delta
from .patterns import FAMILIES, build_pattern
from .report import FAIL, SKIPPED, build_report, render_text
from .solve import (
    DEFAULT_BUDGET,
    FEASIBLE,
    TIMEOUT,
    ht_infeasible,
    periodic_search,
    solve_circulant,
    window_infeasible,
)
from .verify import PaletteError, PeriodicColoring, verify_periodic

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _odd_t(text: str) -> int:
    try:
        t = int(text)
        DistanceSpec.canonical(t)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc) if "t must" in str(exc) else f"not an integer: {text!r}")
    return t


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _depth(text: str) -> int:
    v = _positive(text)
    if v > MAX_D:
        raise argparse.ArgumentTypeError(f"must be <= {MAX_D}, got {v}")
    return v


def _seq(text: str) -> WidthSequence:
    try:
        return WidthSequence.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad width sequence {text!r}: {exc}")


def _steps(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad step list {text!r}")


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_dist(args) -> int:
    d = dist_delta(args.t, args.gap)
    _emit(args, {"t": args.t, "gap": args.gap, "distance": d}, str(d))
    return EXIT_OK


def cmd_offsets(args) -> int:
    offs = sorted(conflict_offsets(args.t, args.width))
    _emit(args, {"t": args.t, "width": args.width, "offsets": offs}, ",".join(map(str, offs)))
    return EXIT_OK


def cmd_pattern(args) -> int:
    pat = build_pattern(args.family, args.t, args.d)
    word = pat.coloring.compact() if args.compact and pat.coloring.compact() else pat.coloring.canonical()
    _emit(args, pat.to_json(), word)
    return EXIT_OK


def cmd_verify(args) -> int:
    text = args.word if args.word is not None else Path(args.file).read_text()
    coloring = PeriodicColoring.parse(text)
    bad = verify_periodic(coloring, args.t, args.seq)
    payload = {"t": args.t, "S": list(args.seq.widths), "period": coloring.period,
               "valid": bad is None, "violations": [] if bad is None else [bad.to_json()]}
    if bad is None:
        msg = "valid"
    else:
        msg = (f"violation: positions {bad.u} and {bad.v} share color {bad.color} "
               f"(width {bad.width}) at distance {bad.distance}")
    _emit(args, payload, msg)
    return EXIT_OK if bad is None else EXIT_NEGATIVE


def cmd_bounds(args) -> int:
    lo = lb_ddist(args.t, args.d)
    hi = ub_ddist(args.t, args.d, args.horizon)
    payload = {"lower": lo.to_json(), "upper": hi.to_json()}
    text = f"lower {lo.value}"
    if not lo.hypothesis_met:
        text += " (hypothesis d >= (t+1)/2 unmet; "
        text += "certified)" if lo.certified else "not certified)"
    text += f"\nupper {hi.value}"
    if hi.certificate is not None:
        text += f" (greedy used {hi.certificate.colors_used} colors)"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_clique(args) -> int:
    ok, cert = clique_check(args.t, args.d, args.n)
    payload = {"t": args.t, "d": args.d, "n": args.n, "clique": ok}
    if cert is not None:
        payload["certificate"] = cert.to_json()
    _emit(args, payload, "true" if ok else "false")
    return EXIT_OK if ok else EXIT_NEGATIVE


def _solve_exit(args, out) -> int:
    payload = out.to_json()
    text = f"{out.status} (k={out.k}, nodes={out.nodes})"
    if out.optimum is not None:
        text = f"optimum {out.optimum} (nodes={out.nodes})"
    if out.status == FEASIBLE and out.witness is not None:
        w = payload["witness"]
        text += "\n" + (w if isinstance(w, str) else ",".join(map(str, w)))
    _emit(args, payload, text)
    if out.status == TIMEOUT:
        return EXIT_BUDGET
    return EXIT_OK if out.status == FEASIBLE else EXIT_NEGATIVE


def cmd_solve(args) -> int:
    common = {"budget": args.budget, "threads": args.threads}
    if args.host == "circulant":
        spec = CirculantSpec(args.n, args.steps)
        out = solve_circulant(spec, args.seq, k=args.k, minimize=args.minimize, **common)
    elif args.host == "window":
        out = window_infeasible(args.t, args.seq, args.k, args.window, **common)
    elif args.host == "ht":
        out = ht_infeasible(args.t, args.k, **common)
    else:
        out = periodic_search(args.t, args.seq, args.k, args.period, **common)
    return _solve_exit(args, out)


def cmd_report(args) -> int:
    rows = build_report(args.tmax, args.budget)
    _emit(args, {"rows": [r.to_json() for r in rows]}, render_text(rows))
    verdicts = {r.verdict for r in rows}
    if FAIL in verdicts:
        return EXIT_NEGATIVE
    if SKIPPED in verdicts:
        return EXIT_BUDGET
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--threads", type=_positive, default=1)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="spacking",
        description="S-packing colorings of the distance graphs G(Z,{2,t}) and circulants C_n(2,t).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", parents=[common], help="exact distance d(0, gap) in G_t")
    p.add_argument("--t", type=_odd_t, required=True)
    p.add_argument("--gap", type=int, required=True)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("offsets", parents=[common], help="gaps within a given distance")
    p.add_argument("--t", type=_odd_t, required=True)
    p.add_argument("--width", type=_depth, required=True)
    p.set_defaults(func=cmd_offsets)

    p = sub.add_parser("pattern", parents=[common], help="emit a verified periodic coloring")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--t", type=_odd_t, required=True)
    p.add_argument("--d", type=_depth)
    p.add_argument("--compact", action="store_true", help="digit string when all colors <= 9")
    p.set_defaults(func=cmd_pattern)

    p = sub.add_parser("verify", parents=[common], help="check a periodic coloring of G_t")
    p.add_argument("--t", type=_odd_t, required=True)
    p.add_argument("--seq", type=_seq, required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--word")
    src.add_argument("--file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", parents=[common], help="lower and upper d-distance bounds")
    p.add_argument("--t", type=_odd_t, required=True)
    p.add_argument("--d", type=_depth, required=True)
    p.add_argument("--horizon", type=_positive, help="also run the greedy on [-H, H)")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("clique", parents=[common], help="are 0..n-1 pairwise within distance d?")
    p.add_argument("--t", type=_odd_t, required=True)
    p.add_argument("--d", type=_depth, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=cmd_clique)

    p = sub.add_parser("solve", help="exact search")
    hosts = p.add_subparsers(dest="host", required=True)
    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)

    q = hosts.add_parser("circulant", parents=[common, budget])
    q.add_argument("--n", type=_positive, required=True)
    q.add_argument("--steps", type=_steps, required=True)
    q.add_argument("--seq", type=_seq, required=True)
    mode = q.add_mutually_exclusive_group(required=True)
    mode.add_argument("--k", type=_positive)
    mode.add_argument("--minimize", type=_positive, metavar="KMAX")
    q.set_defaults(func=cmd_solve)

    q = hosts.add_parser("window", parents=[common, budget])
    q.add_argument("--t", type=_odd_t, required=True)
    q.add_argument("--seq", type=_seq, required=True)
    q.add_argument("--k", type=_positive, required=True)
    q.add_argument("--window", type=_positive, required=True)
    q.set_defaults(func=cmd_solve)

    q = hosts.add_parser("ht", parents=[common, budget])
    q.add_argument("--t", type=_odd_t, required=True)
    q.add_argument("--k", type=_positive, default=5)
    q.set_defaults(func=cmd_solve)

    q = hosts.add_parser("periodic", parents=[common, budget])
    q.add_argument("--t", type=_odd_t, required=True)
    q.add_argument("--seq", type=_seq, required=True)
    q.add_argument("--k", type=_positive, required=True)
    q.add_argument("--period", type=_positive, required=True)
    q.set_defaults(func=cmd_solve)

    p = sub.add_parser("report", parents=[common], help="reproduce every claimed value")
    p.add_argument("--tmax", type=_odd_t, default=13)
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (ValueError, PaletteError, OSError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
