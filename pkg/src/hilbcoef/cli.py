"""Command-line front end.

Exit codes: 0 when every applicable check passes, 1 when a mathematical
check fails, 2 for unreadable input or bad arguments.
"""

import argparse
import json
import sys

from .betti import (
    BettiError,
    format_betti_table,
    generate_ci,
    gorenstein_split,
    is_quasi_pure,
    load_betti_table,
    shift_profile,
    socle_shift,
)
from .bounds import format_rational, verify
from .coeffs import (
    coefficients_from_shifts,
    gorenstein_coefficients,
    peskine_szpiro_check,
)
from .identities import run_sweep
from .series import (
    NonDivisibleError,
    artinian_mismatches,
    hilbert_coefficients,
    oracle_coefficients,
    reduced_numerator,
)

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _load(path):
    try:
        return load_betti_table(path)
    except (OSError, BettiError) as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _emit(args, payload, lines):
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def cmd_analyze(args):
    table = _load(args.path)
    profile = shift_profile(table)
    c = socle_shift(table)
    ps = peskine_szpiro_check(table)
    try:
        q = reduced_numerator(table)
    except NonDivisibleError as exc:
        raise UsageError(f"{args.path}: {exc}") from exc
    L = min(6, q.degree) if args.max_l is None else args.max_l
    e = hilbert_coefficients(q, L)
    residuals = [str(v) for v in ps.power_sums]
    payload = {
        "n": table.n,
        "s": table.s,
        "m": list(profile.m),
        "M": list(profile.M),
        "quasi_pure": is_quasi_pure(profile),
        "gorenstein": c is not None,
        "c": c,
        "Q": str(q),
        "e": [str(v) for v in e],
        "peskine_szpiro": residuals,
        "multiplicity_from_power_sums": format_rational(ps.multiplicity),
    }
    lines = [
        f"n = {table.n}, s = {table.s}",
        f"m = {list(profile.m)}, M = {list(profile.M)}",
        f"quasi-pure: {payload['quasi_pure']}",
        f"gorenstein: {c is not None}" + (f" (c = {c})" if c is not None else ""),
        f"Q(t) = {q}",
        "e = (" + ", ".join(str(v) for v in e) + ")",
        "power sums p_0..p_s = (" + ", ".join(residuals) + ")",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_verify(args):
    table = _load(args.path)
    try:
        report = verify(table, args.max_l)
    except NonDivisibleError as exc:
        raise UsageError(f"{args.path}: {exc}") from exc
    for note in report.notes:
        print(f"warning: {note}", file=sys.stderr)
    lines = [
        f"n = {report.n}, s = {report.s}, quasi-pure = {report.quasi_pure}, "
        f"gorenstein = {report.gorenstein}, c = {report.c}",
        f"coefficient routes agree: {report.routes_agree}",
        f"{'l':>3} {'lower':>14} {'e_l':>10} {'upper':>14}  pass",
    ]
    for row in report.rows:
        lines.append(
            f"{row.l:>3} {format_rational(row.lower):>14} {row.e:>10} "
            f"{format_rational(row.upper):>14}  {row.passed}"
        )
    _emit(args, report.to_dict(), lines)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def cmd_identities(args):
    res = run_sweep(args.sweep, args.seed)
    payload = {
        "sweep": args.sweep,
        "seed": args.seed,
        "checked": dict(sorted(res.checked.items())),
        "total": res.total,
        "failures": [[name, repr(params)] for name, params in res.failures],
    }
    lines = [f"{name}: {count}" for name, count in sorted(res.checked.items())]
    lines.append(f"total {res.total} instances, {len(res.failures)} failures")
    lines += [f"FAILED {name} {params!r}" for name, params in res.failures]
    _emit(args, payload, lines)
    return EXIT_OK if res.ok else EXIT_CHECK_FAILED


def cmd_generate(args):
    if args.family != "ci":
        raise UsageError(f"unknown family {args.family!r}")
    try:
        degrees = [int(x) for x in args.degrees.split(",") if x.strip()]
        table = generate_ci(degrees, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    text = format_betti_table(table, "json")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_oracle(args):
    table = _load(args.path)
    try:
        q = reduced_numerator(table)
    except NonDivisibleError as exc:
        raise UsageError(f"{args.path}: {exc}") from exc
    d = table.n - table.s
    if d == 0:
        bad = artinian_mismatches(table, q)
        payload = {"mode": "artinian", "Q": str(q), "mismatches": bad}
        lines = [f"artinian: comparing H(x) with q_x for x <= {q.degree + 1}"]
        lines.append("all agree" if not bad else f"mismatch at x = {bad}")
        _emit(args, payload, lines)
        return EXIT_OK if not bad else EXIT_CHECK_FAILED

    L = d - 1 if args.max_l is None else args.max_l
    if L > d - 1:
        print(f"warning: max l truncated from {L} to n - s - 1 = {d - 1}", file=sys.stderr)
        L = d - 1
    routes = {
        "oracle": oracle_coefficients(table, L),
        "series": hilbert_coefficients(q, L),
        "shifts": coefficients_from_shifts(table, L),
    }
    if socle_shift(table) is not None:
        routes["gorenstein"] = gorenstein_coefficients(gorenstein_split(table), L)
    agree = len(set(routes.values())) == 1
    payload = {
        "mode": "polynomial",
        "routes": {k: [str(v) for v in vals] for k, vals in routes.items()},
        "agree": agree,
    }
    lines = [f"{name:>10}: " + ", ".join(str(v) for v in vals) for name, vals in routes.items()]
    lines.append("all routes agree" if agree else "DISAGREEMENT")
    _emit(args, payload, lines)
    return EXIT_OK if agree else EXIT_CHECK_FAILED


def _global_flags(suppress):
    # subcommands repeat the flags with SUPPRESS defaults so they do not clobber
    # values given before the subcommand name
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    flags = argparse.ArgumentParser(add_help=False)
    flags.add_argument("--json", action="store_true", default=default(False),
                       help="machine-readable output")
    flags.add_argument("--seed", type=int, default=default(0),
                       help="seed for randomized sweeps")
    flags.add_argument("--max-l", type=int, default=default(None), dest="max_l")
    flags.add_argument("-o", dest="output", default=default(None), help="output path")
    return flags


def build_parser():
    common = _global_flags(suppress=True)
    parser = argparse.ArgumentParser(
        prog="hilbcoef",
        description="Hilbert coefficients and their bounds from Betti tables.",
        parents=[_global_flags(suppress=False)],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="shifts, flags and e_l of a table")
    p.add_argument("path")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", parents=[common], help="check the coefficient bounds")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("identities", parents=[common], help="run the identity sweeps")
    p.add_argument("--sweep", choices=["small", "full"], default="small")
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("generate", parents=[common], help="write a Betti table")
    p.add_argument("family", choices=["ci"])
    p.add_argument("--degrees", required=True, help="comma-separated generator degrees")
    p.add_argument("--n", type=int, required=True, help="number of variables")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("oracle", parents=[common], help="compare against the Hilbert function")
    p.add_argument("path")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
