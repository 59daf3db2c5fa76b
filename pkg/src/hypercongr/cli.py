"""Command-line entry point: ``hypercongr {verify,gammap,series,identity,sum}``.

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or
precondition error.
"""

from __future__ import annotations

import argparse
import os
import sys
import warnings
from fractions import Fraction

from .exact import coefficients_as_rationals, valuation_rational
from .hyper import WrongResidueClass, phi_series, psi_series, vanhamme_lhs, vanhamme_lhs_mod
from .identities import DEFAULT_TOL, run_battery
from .padic import NotPAdicallyIntegral, PAdicContext, gamma_p_rational, is_prime, representative
from .verify import (
    DEFAULT_RANGES,
    ADMISSIBLE,
    EmptyRangeWarning,
    SuiteRequest,
    admissible_primes,
    reports_to_json,
    run_key_steps,
    run_suite,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
EXACT_PRINT_LIMIT = 200


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return int(text), int(text)
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo..hi, got {text!r}") from None


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("HYPERCONGR_JOBS", "1")))
    except ValueError:
        return 1


def _vstr(v) -> str:
    return "inf" if v == float("inf") else str(v)


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _print_table(reports, include_timing: bool, out):
    # same fields as the JSON objects, one row per report
    dicts = [r.to_dict(include_timing) for r in reports]
    cols = list(dicts[0])
    rows = [[_cell(d[c]) for c in cols] for d in dicts]
    widths = [max(len(c), *(len(row[i]) for row in rows)) for i, c in enumerate(cols)]
    print("  ".join(c.rjust(w) for c, w in zip(cols, widths)), file=out)
    for row in rows:
        print("  ".join(v.rjust(w) for v, w in zip(row, widths)), file=out)


def cmd_verify(args) -> int:
    lo, hi = args.primes if args.primes else DEFAULT_RANGES[args.suite]
    try:
        req = SuiteRequest(args.suite, lo, hi, parallelism=args.jobs, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc))
    primes, skipped = admissible_primes(req)
    if not primes:
        print(f"warning: no admissible primes for suite {args.suite} in {lo}..{hi}", file=sys.stderr)
        return EXIT_OK if args.allow_empty else EXIT_USAGE

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", EmptyRangeWarning)
        if args.suite == "steps":
            results = run_key_steps(req)
        else:
            results = run_suite(req)

    if args.suite == "steps":
        import json

        text = json.dumps([s.to_dict() for s in results], indent=2) + "\n"
        if args.format == "json":
            sys.stdout.write(text)
        else:
            for s in results:
                print(f"{s.prime:>5}  {s.step:<24} {'pass' if s.passed else 'FAIL'}  {s.detail}")
    else:
        text = reports_to_json(results, include_timing=args.timings)
        if args.format == "json":
            sys.stdout.write(text)
        else:
            _print_table(results, args.timings, sys.stdout)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)

    failed = sum(not r.passed for r in results)
    footer = f"{len(primes)} primes checked, {failed} failed, {skipped} non-admissible primes skipped"
    if args.format == "table":
        print(footer)
    else:
        print(footer, file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected a rational a/b, got {text!r}") from None


def cmd_gammap(args) -> int:
    x = _parse_rational(args.x)
    try:
        ctx = PAdicContext(args.p, args.k)
        value = gamma_p_rational(x, ctx)
        n = representative(x, ctx)
    except NotPAdicallyIntegral as exc:
        raise UsageError(f"NotPAdicallyIntegral: {exc}")
    except ValueError as exc:
        raise UsageError(str(exc))
    print(f"Gamma_{args.p}({x}) mod {args.p}^{args.k} = {value.residue}")
    print(f"representative n = {n}")
    return EXIT_OK


def cmd_series(args) -> int:
    build = psi_series if args.which == "psi" else phi_series
    try:
        series = build(args.prime, args.order)
    except (WrongResidueClass, ValueError) as exc:
        raise UsageError(str(exc))
    for n, c in enumerate(coefficients_as_rationals(series)):
        print(f"x^{n}: {c.numerator}/{c.denominator}  v_{args.prime} = {_vstr(valuation_rational(c, args.prime))}")
    return EXIT_OK


def cmd_identity(args) -> int:
    results = run_battery(args.which, args.trials, args.seed, args.tol)
    bad = [r for r in results if not r.passed]
    worst = max((r.residual for r in results), default=0.0)
    for r in bad:
        print(f"FAIL {r.which} {r.params} residual={r.residual:.3e}", file=sys.stderr)
    kind = "exact" if args.which == "whipple" else f"max residual {worst:.3e}"
    print(f"{args.which}: {len(results) - len(bad)}/{len(results)} passed ({kind}, seed={args.seed})")
    return EXIT_FAIL if bad else EXIT_OK


def cmd_sum(args) -> int:
    p, k = args.p, args.k
    if p < 5 or not is_prime(p):
        raise UsageError(f"-p must be a prime >= 5, got {p}")
    if not 1 <= k <= 5:
        raise UsageError(f"-k must be between 1 and 5, got {k}")
    ctx = PAdicContext(p, k)
    residue = vanhamme_lhs_mod(p, ctx).residue
    if p <= EXACT_PRINT_LIMIT:
        s = vanhamme_lhs(p)
        print(f"S_{p} = {s.numerator}/{s.denominator}")
        print(f"v_{p} = {_vstr(valuation_rational(s, p))}")
    else:
        print(f"S_{p}: exact value omitted for p > {EXACT_PRINT_LIMIT}")
    print(f"S_{p} mod {p}^{k} ({ctx.modulus}) = {residue}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypercongr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a congruence suite over a prime range")
    v.add_argument("--suite", required=True, choices=sorted(ADMISSIBLE))
    v.add_argument("--primes", type=parse_range, help="inclusive range lo..hi")
    v.add_argument("--format", choices=("table", "json"), default="table")
    v.add_argument("--jobs", type=int, default=_default_jobs())
    v.add_argument("--out", help="also write the JSON reports to this file")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--timings", action="store_true", help="include elapsed_ms (output no longer reproducible)")
    v.add_argument("--allow-empty", action="store_true", help="exit 0 when no prime is admissible")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gammap", help="p-adic Gamma of a rational")
    g.add_argument("-p", type=int, required=True)
    g.add_argument("-k", type=int, default=1)
    g.add_argument("-x", required=True, help="rational a/b")
    g.set_defaults(func=cmd_gammap)

    s = sub.add_parser("series", help="Taylor coefficients of Psi or Phi")
    s.add_argument("--prime", type=int, required=True)
    s.add_argument("--which", choices=("psi", "phi"), default="psi")
    s.add_argument("--order", type=int, default=8)
    s.set_defaults(func=cmd_series)

    i = sub.add_parser("identity", help="seeded exact/numeric identity checks")
    i.add_argument("--which", choices=sorted(DEFAULT_TOL), required=True)
    i.add_argument("--trials", type=int)
    i.add_argument("--seed", type=int, default=0)
    i.add_argument("--tol", type=float)
    i.set_defaults(func=cmd_identity)

    m = sub.add_parser("sum", help="the truncated van Hamme sum S_p")
    m.add_argument("-p", type=int, required=True)
    m.add_argument("-k", type=int, default=5)
    m.set_defaults(func=cmd_sum)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "jobs", 1) is not None and getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
