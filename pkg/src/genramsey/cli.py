"""Command-line front end.

``r`` means the deficiency (edge budget of the (n, r) graph) for ``eval``
and the first-clause budget of R(n, r; k, s) for ``oracle``; both forms are
printed in every output.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb

from . import __version__
from .closed_forms import (
    RamseyQuery,
    extremal_dirac,
    extremal_sparse,
    generalized_ramsey_closed,
)
from .enumeration import BudgetExceeded
from .graph import Graph, girth, independence_number
from .graph6 import decode, encode
from .harness import (
    EXIT_BUDGET,
    EXIT_DOMAIN,
    EXIT_MISMATCH,
    EXIT_OK,
    ResultCache,
    SweepConfig,
    dump_report,
    oracle_ramsey,
    run_sweep,
)
from .oracle import brute_extremal_e, brute_girth_extremal
from .witnesses import active_case, best_witness

KNOWN_VALUES = [
    (3, 3, 6), (3, 4, 9), (3, 5, 14), (3, 6, 18), (3, 7, 23),
    (3, 8, 28), (3, 9, 36), (4, 4, 18), (4, 5, 25),
]


def parse_range(text: str) -> tuple[int, ...]:
    """``"4..6"`` -> (4, 5, 6); ``"5"`` -> (5,); ``"2,4"`` -> (2, 4)."""
    out: list[int] = []
    for part in text.split(","):
        if ".." in part:
            a, b = part.split("..", 1)
            out.extend(range(int(a), int(b) + 1))
        else:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return tuple(out)


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        for line in lines:
            print(line)


def _cache(args) -> ResultCache | None:
    if args.no_cache:
        return None
    return ResultCache(args.cache_dir)


def cmd_eval(args) -> int:
    n, r, k = args.n, args.r, args.k
    try:
        value = generalized_ramsey_closed(n, r, k)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    case = active_case(n, r, k)
    w = best_witness(n, r, k)
    payload = {
        "n": n,
        "r_star": r,
        "r": comb(n, 2) - r,
        "k": k,
        "s": 1,
        "value": value,
        "case": case,
        "witness": w.label(),
        "witness_sizes": list(w.component_sizes),
        "witness_graph6": encode(w.realize()),
    }
    _emit(args, payload, [
        f"R({n}, {comb(n, 2) - r}; {k}, 1) = {value}   [deficiency r* = {r}]",
        f"case: {case}",
        f"witness: {w.label()} (order {w.order}, graph6 {payload['witness_graph6']})",
    ])
    return EXIT_OK


def cmd_oracle(args) -> int:
    try:
        q = RamseyQuery(args.n, args.r, args.k, args.s)
        verdict = oracle_ramsey(q, args.pmax, _cache(args))
    except (ValueError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    value = verdict["value"]
    payload = dict(verdict, r_star=q.r_star)
    _emit(args, payload, [
        f"R({q.n}, {q.r}; {q.k}, {q.s}) = {value}   [deficiency r* = {q.r_star}, p_max = {args.pmax}]",
        f"certificate: {verdict['certificate']}",
        "stats: " + json.dumps(verdict["stats"]),
    ])
    return EXIT_BUDGET if not isinstance(value, int) else EXIT_OK


def cmd_sweep(args) -> int:
    config = SweepConfig(args.n, args.k, args.r, args.pmax, args.jobs)
    for n in config.n_values:
        if n < 4:
            print(f"error: formula needs n >= 4, got {n}", file=sys.stderr)
            return EXIT_DOMAIN
    report = run_sweep(config, _cache(args))
    text = dump_report(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    if args.format == "json" or not args.out:
        sys.stdout.write(text)
    s = report["summary"]
    print(
        f"{s['status']}: {s['compared']} compared, {s['skipped']} skipped, "
        f"{s['mismatches']} mismatches, {s['witness_failures']} witness failures",
        file=sys.stderr,
    )
    return EXIT_OK if s["status"] == "PASS" else EXIT_MISMATCH


def cmd_extremal(args) -> int:
    n, m, p = args.n, args.m, args.p
    formula = None
    source = None
    if m == n - 2 and n >= 3 and p >= n:
        formula, source = extremal_sparse(n, p), "floor((n-2)p/(n-1))"
    elif n - 2 * (comb(n, 2) - m) >= 0 and comb(n, 2) - m >= 1 and p >= n:
        formula, source = extremal_dirac(n, comb(n, 2) - m, p), f"t_{n - (comb(n, 2) - m)}(p)"
    try:
        verdict = brute_extremal_e(n, m, p, max_order=args.pmax)
    except (ValueError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET if isinstance(exc, BudgetExceeded) else EXIT_DOMAIN
    payload = {"n": n, "m": m, "p": p, "formula": formula, "formula_source": source,
               "oracle": verdict.value, "certificate": verdict.certificate}
    lines = [f"e({n}, {m}; {p}): oracle {verdict.value}"]
    agree = True
    if formula is not None:
        agree = formula == verdict.value
        lines.append(f"formula {formula} [{source}], {'agree' if agree else 'DISAGREE'}")
    elif m == n - 1 and n >= 3:
        girth_v = brute_girth_extremal(n, p, max_order=args.pmax).value
        agree = girth_v == verdict.value
        payload["girth_oracle"] = girth_v
        lines.append(f"no closed form; girth oracle {girth_v}, {'agree' if agree else 'DISAGREE'}")
    else:
        lines.append("no closed form for these parameters")
    payload["agree"] = agree
    _emit(args, payload, lines)
    return EXIT_OK if agree else EXIT_MISMATCH


def cmd_known_values(args) -> int:
    rows = []
    ok = True
    cache = _cache(args)
    for a, b, value in KNOWN_VALUES:
        status = "reference only"
        if a == 3 and b <= 4 and not args.no_check:
            verdict = oracle_ramsey(RamseyQuery(a, 1, b, 1), 10, cache)
            status = "verified" if verdict["value"] == value else f"MISMATCH ({verdict['value']})"
            ok &= verdict["value"] == value
        rows.append({"R": f"R({a},{b})", "value": value, "status": status})
    _emit(args, {"known_values": rows}, [f"{r['R']} = {r['value']:>3}  {r['status']}" for r in rows])
    return EXIT_OK if ok else EXIT_MISMATCH


def _parse_edges(tokens: list[str]) -> list[tuple[int, int]]:
    edges = []
    for tok in tokens:
        for piece in tok.split(","):
            if piece:
                u, v = piece.split("-")
                edges.append((int(u), int(v)))
    return edges


def cmd_encode(args) -> int:
    try:
        if args.witness:
            n, r, k = args.witness
            g = best_witness(n, r, k).realize()
        else:
            g = Graph.from_edges(args.order, _parse_edges(args.edges or []))
        print(encode(g))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


def cmd_decode(args) -> int:
    try:
        g = decode(args.graph6)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    gi = girth(g)
    payload = {
        "order": g.order,
        "edges": g.edges(),
        "num_edges": g.num_edges(),
        "alpha": independence_number(g),
        "girth": None if gi == float("inf") else gi,
    }
    _emit(args, payload, [
        f"order {g.order}, {g.num_edges()} edges, alpha {payload['alpha']}, girth {payload['girth'] or 'inf'}",
        "edges: " + " ".join(f"{u}-{v}" for u, v in g.edges()),
    ])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="genramsey", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cache-dir", default=None, help="result cache directory (env GENRAMSEY_CACHE_DIR)")
    common.add_argument("--no-cache", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="closed formula for R(n, C(n,2)-r; k, 1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True, help="deficiency r* (1 <= r <= n-2)")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("oracle", parents=[common], help="exhaustive R(n, r; k, s)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True, help="first-clause edge budget r of R(n, r; k, s)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--pmax", type=int, default=10)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("sweep", parents=[common], help="formula vs oracle over a grid")
    p.add_argument("--n", type=parse_range, required=True)
    p.add_argument("--r", type=parse_range, default=None)
    p.add_argument("--k", type=parse_range, required=True)
    p.add_argument("--pmax", type=int, default=10)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None, help="write the JSON report here")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("extremal", parents=[common], help="e(n, m; p): formula and oracle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--pmax", type=int, default=10)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("known-values", parents=[common], help="classical Ramsey numbers")
    p.add_argument("--no-check", action="store_true", help="skip the oracle checks")
    p.set_defaults(func=cmd_known_values)

    p = sub.add_parser("encode", parents=[common], help="graph to graph6")
    p.add_argument("--order", type=int, default=0)
    p.add_argument("--edges", nargs="*", help="edges as u-v, space or comma separated")
    p.add_argument("--witness", type=int, nargs=3, metavar=("N", "R", "K"))
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common], help="graph6 to edge list")
    p.add_argument("graph6")
    p.set_defaults(func=cmd_decode)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
