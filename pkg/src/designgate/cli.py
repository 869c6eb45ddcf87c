"""Command-line front end.

Subcommands: lambda, scan, gate, theorem, wenum.  Exit codes: 0 success,
2 bad input, 3 I/O failure, 4 reference-set mismatch.
"""

from __future__ import annotations

import argparse
import os
import sys

from .families import (
    CodeFamily,
    FAMILY_LABELS,
    M_MAXES,
    NonIntegralLambdaError,
    admissible_scan,
    apply_strengthening,
    lambda_at,
    scan_levels,
)
from .gate import integrality_gate
from .gleason import LENGTH_CAP, extremal_weight_enumerator
from .report import FORMATS, Report, exact_str, gate_row, lambda_row, render, set_row, timestamp_now
from .store import ResultStore
from .theorems import THEOREM_IDS, run_theorem

_FAMILY_INDEX = {label: r for r, label in enumerate(FAMILY_LABELS)}


def _add_common(p: argparse.ArgumentParser, *, fmt: bool = True) -> None:
    if fmt:
        p.add_argument("--format", choices=FORMATS, default="table")
        p.add_argument("--no-timestamp", action="store_true",
                       help="omit the generation timestamp (byte-deterministic output)")
    p.add_argument("--out", metavar="PATH", default=None,
                   help="write output to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="designgate",
        description="Exact integrality tests for support t-designs of "
                    "extremal doubly even self-dual codes.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lambda", help="print exact lambda levels for one family member")
    p.add_argument("--family", choices=FAMILY_LABELS, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=int, required=True)

    p = sub.add_parser("scan", help="lambda-integrality scan over an m range")
    p.add_argument("--family", choices=FAMILY_LABELS, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--m-min", type=int, default=None)
    p.add_argument("--m-max", type=int, default=None)
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default: available parallelism)")
    _add_common(p)

    p = sub.add_parser("gate", help="run one integrality gate")
    p.add_argument("--family", choices=FAMILY_LABELS, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--u", type=int, default=None, help="reference weight (default: k)")
    _add_common(p)

    p = sub.add_parser("theorem", help="reproduce a classification result and diff it")
    p.add_argument("id", choices=THEOREM_IDS)
    p.add_argument("--t", type=int, default=None,
                   help="for thm5.x: stop the ladder at this strength")
    p.add_argument("--jobs", type=int, default=None)
    _add_common(p)

    p = sub.add_parser("wenum", help="extremal weight enumerator coefficients")
    p.add_argument("--n", type=int, required=True)
    _add_common(p, fmt=False)
    return ap


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
        return
    with open(out_path, "w", encoding="ascii") as fh:
        fh.write(text)


def _jobs(args) -> int:
    if args.jobs is not None:
        if args.jobs < 1:
            raise ValueError("--jobs must be >= 1")
        return args.jobs
    return os.cpu_count() or 1


def _cmd_lambda(args) -> int:
    f = CodeFamily(args.m, _FAMILY_INDEX[args.family])
    if not 1 <= args.m <= f.m_max:
        raise ValueError(f"m = {args.m} outside [1, {f.m_max}]")
    t_eff = apply_strengthening(f, args.t)
    for i in range(f.am_strength, t_eff + 1):
        v = lambda_at(f, i)
        flag = "INTEGRAL" if v.denominator == 1 else "NON-INTEGRAL"
        print(f"lambda_{i} = {exact_str(v)}  {flag}")
    return 0


def _cmd_scan(args) -> int:
    r = _FAMILY_INDEX[args.family]
    ms = admissible_scan(r, args.t, args.m_min, args.m_max, jobs=_jobs(args))
    lo = args.m_min if args.m_min is not None else 1
    hi = args.m_max if args.m_max is not None else M_MAXES[r]
    report = Report(id="scan", inputs={"family": args.family, "t": args.t,
                                       "m_range": [lo, hi]})
    if not args.no_timestamp:
        report.generated_at = timestamp_now()
    for m in range(lo, hi + 1):
        f = CodeFamily(m, r)
        for i in scan_levels(f, args.t):
            report.rows.append(lambda_row(m, i, lambda_at(f, i)))
    report.rows.append(set_row("admissible", ms))
    report.surviving_set = ms
    _emit(render(report, args.format), args.out)
    return 0


def _cmd_gate(args) -> int:
    f = CodeFamily(args.m, _FAMILY_INDEX[args.family])
    store = ResultStore.from_env()
    try:
        res = integrality_gate(f, args.t, args.u, store=store)
    except NonIntegralLambdaError as exc:
        print(f"PRE-GATE FAIL: {exc}")
        return 0
    report = Report(id="gate", inputs={"family": args.family, "m": args.m,
                                       "t": args.t, "u": res.u})
    if not args.no_timestamp:
        report.generated_at = timestamp_now()
    report.rows.append(gate_row(res))
    report.surviving_set = [args.m] if res.integral else []
    _emit(render(report, args.format), args.out)
    return 0


def _cmd_theorem(args) -> int:
    store = ResultStore.from_env()
    outcome = run_theorem(args.id, jobs=_jobs(args), store=store,
                          timestamp=not args.no_timestamp, upto_t=args.t)
    _emit(render(outcome.report, args.format), args.out)
    if outcome.mismatches:
        for line in outcome.mismatches:
            print(f"MISMATCH {line}", file=sys.stderr)
        return 4
    return 0


def _cmd_wenum(args) -> int:
    if args.n % 8 or not 8 <= args.n <= LENGTH_CAP:
        raise ValueError(f"n must be a multiple of 8 in [8, {LENGTH_CAP}], got {args.n}")
    enum = extremal_weight_enumerator(args.n)
    lines = [f"extremal weight enumerator, n = {args.n}"]
    for w, a in enumerate(enum.coefficients):
        if a:
            lines.append(f"A_{w} = {a}")
    negs = enum.negative_weights()
    if negs:
        lines.append(f"WARNING: negative coefficients at weights {negs}; "
                     "no code attains this enumerator")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


_HANDLERS = {
    "lambda": _cmd_lambda,
    "scan": _cmd_scan,
    "gate": _cmd_gate,
    "theorem": _cmd_theorem,
    "wenum": _cmd_wenum,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
