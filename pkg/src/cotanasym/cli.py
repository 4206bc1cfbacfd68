"""Command-line interface.

One subcommand per artifact: `gn` (Taylor coefficients), `cot` (cotangent
sum), `grecip` (reciprocity cross-check), `coeffs` (exact asymptotic
coefficients), `guard` (precision guards), `residual` / `figure` (truncated
expansion diagnostics), `oracle` (divisor-sum reconstruction), `verify`
(property suite).

Output is CSV (default) or JSON on stdout; every numeric column is printed
in scientific notation with --out-digits significant digits and re-parses to
the internal value at that precision.  Exit codes: 0 success, 2 argument or
domain errors, 3 precision/convergence failures.  Working precision is
chosen automatically per subcommand; --digits overrides (with a warning on
stderr if below the recommendation).

The Bernoulli table can be persisted across runs: --bernoulli-cache PATH or
the COTANASYM_BERNOULLI_CACHE environment variable (text lines
"k numerator denominator"); it is loaded at startup and saved back on
success.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import mpmath
from mpmath import mpf

from . import asym, cotangent, gn, oracle, verify
from .coeffs import c_tilde
from .errors import (
    AccuracyError,
    CacheFormatError,
    CotanasymError,
    DomainError,
    InsufficientPrecisionError,
    InvalidArgumentError,
)
from .exact import load_bernoulli_cache, save_bernoulli_cache
from .gn import recommend_digits
from .precision import PrecisionContext, eval_pi_poly
from .quadrature import QuadratureConfig

ENV_CACHE = "COTANASYM_BERNOULLI_CACHE"


def fmt_real(x, out_digits: int) -> str:
    """Scientific-notation string with out_digits significant digits."""
    s = mpmath.nstr(mpf(x), out_digits, min_fixed=0, max_fixed=0, strip_zeros=False)
    if "e" not in s:  # mpmath keeps magnitude-[1,10) values fixed
        s += "e+0"
    return s


def _emit(rows, columns, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([dict(zip(columns, row)) for row in rows], indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(rows)
    return buf.getvalue()


def _context_for(args, auto_digits: int) -> PrecisionContext:
    if args.digits is not None:
        if args.digits < auto_digits:
            print(
                f"warning: --digits {args.digits} is below the recommended {auto_digits}; "
                "results may lose significance",
                file=sys.stderr,
            )
        return PrecisionContext(args.digits)
    return PrecisionContext(auto_digits)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_gn(args) -> str:
    n_last = args.n + args.count - 1
    ctx = _context_for(args, recommend_digits(n_last, max(args.out_digits, 10)))
    rows = []
    with ctx.work():
        for n in range(args.n, n_last + 1):
            value = gn.g_numeric(n, ctx)
            minus = fmt_real(value - mpf(1) / n, args.out_digits) if n >= 1 else ""
            rows.append((n, ctx.digits, fmt_real(value, args.out_digits), minus))
    return _emit(rows, ("n", "digits_used", "g_n", "g_n_minus_inv_n"), args.format)


def cmd_cot(args) -> str:
    ctx = _context_for(args, args.out_digits + 30)
    f = cotangent.reduce_fraction(args.h, args.k)
    value = cotangent.cotangent_sum(f, ctx)
    rows = [(f.h, f.k, fmt_real(value, args.out_digits))]
    return _emit(rows, ("h", "k", "c_value"), args.format)


def cmd_grecip(args) -> str:
    auto = max(recommend_digits(args.taylor_n, 10), args.out_digits + 30)
    ctx = _context_for(args, auto)
    f = cotangent.reduce_fraction(args.h, args.k)
    gd = cotangent.g_direct(f, ctx)
    gt = gn.g_taylor_eval(f.as_rational(), args.taylor_n, ctx)
    with ctx.work():
        diff = abs(gd - gt)
    rows = [(str(f), fmt_real(gd, args.out_digits), fmt_real(gt, args.out_digits),
             fmt_real(diff, args.out_digits))]
    return _emit(rows, ("x", "g_direct", "g_taylor", "abs_diff"), args.format)


def cmd_coeffs(args) -> str:
    ctx = _context_for(args, args.out_digits + 30)
    rows = []
    for l in range(args.max_l + 1):
        value = c_tilde(l).value
        numeric = eval_pi_poly(value, ctx)
        sign = "+" if numeric > 0 else "-"
        rows.append((l, value.format_exact(), fmt_real(numeric, args.out_digits), sign))
    return _emit(rows, ("l", "exact", "numeric", "sign"), args.format)


def cmd_guard(args) -> str:
    report = gn.guard_report(args.n, args.out_digits)
    rows = [(
        args.n,
        f"{report.log10_G1:.6f}",
        f"{report.log10_Ginf:.6f}",
        report.recommended_digits,
        f"{10 ** (report.log10_G1 % 1):.4f}",
        int(report.log10_G1 // 1),
        f"{10 ** (report.log10_Ginf % 1):.4f}",
        int(report.log10_Ginf // 1),
    )]
    columns = ("n", "log10_G1", "log10_Ginf", "recommended_digits",
               "G1_mantissa", "G1_exponent", "Ginf_mantissa", "Ginf_exponent")
    return _emit(rows, columns, args.format)


def cmd_residual(args) -> str:
    ctx = _context_for(args, asym.residual_digits(args.n_end, args.L))
    rows = []
    with ctx.work():
        for n in range(args.n_start, args.n_end + 1, args.step):
            res = asym.residual(n, args.L, ctx)
            scaled = abs(res) * mpf(n) ** (mpf(args.L) / 2 + mpf(5) / 4) * mpmath.exp(
                2 * mpmath.sqrt(mpmath.pi * n)
            )
            rows.append((n, fmt_real(res, args.out_digits), fmt_real(scaled, args.out_digits)))
    return _emit(rows, ("n", "residual", "scaled_residual"), args.format)


def cmd_figure(args) -> str:
    ctx = _context_for(args, asym.figure_digits(args.n_end))
    data = asym.figure_dataset(args.n_start, args.n_end, args.step, ctx)
    rows = [
        (n, fmt_real(fq, args.out_digits), fmt_real(pred, args.out_digits))
        for n, fq, pred in data
    ]
    return _emit(rows, ("n", "figure_quantity", "predicted_l5_term"), args.format)


def cmd_oracle(args) -> str:
    ctx = _context_for(args, 120)
    q = QuadratureConfig(mpf(10) ** (-args.out_digits - 20), 14)
    value = oracle.gn_oracle(args.n, args.m_max, ctx, q)
    ref = oracle.gn_exact_minus_inv_n(args.n, ctx)
    with ctx.work():
        rel = abs((value - ref) / ref)
    rows = [(args.n, fmt_real(value, args.out_digits), fmt_real(ref, args.out_digits),
             fmt_real(rel, 5))]
    return _emit(rows, ("n", "oracle_value", "exact_value", "rel_err"), args.format)


def cmd_verify(args) -> str:
    lines = []
    ok = verify.run_verify(fast=args.fast, out=lines.append)
    if not ok:
        raise AccuracyError("verification failed:\n" + "\n".join(lines))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# parser / entry
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cotanasym",
        description="High-precision cotangent-sum reciprocity coefficients and asymptotics",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=int, default=None,
                        help="override working precision (decimal digits)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out-digits", type=int, default=20,
                        help="significant digits in serialized output")
    common.add_argument("--bernoulli-cache", default=None,
                        help=f"Bernoulli table path (default ${ENV_CACHE})")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gn", parents=[common], help="Taylor coefficients g_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(fn=cmd_gn)

    p = sub.add_parser("cot", parents=[common], help="cotangent sum c(h/k)")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=cmd_cot)

    p = sub.add_parser("grecip", parents=[common],
                       help="g(h/k) directly vs its Taylor series")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--taylor-n", type=int, default=80)
    p.set_defaults(fn=cmd_grecip)

    p = sub.add_parser("coeffs", parents=[common], help="asymptotic coefficients")
    p.add_argument("--max-l", type=int, required=True)
    p.set_defaults(fn=cmd_coeffs)

    p = sub.add_parser("guard", parents=[common], help="loss-of-significance guards")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_guard)

    p = sub.add_parser("residual", parents=[common],
                       help="residual of the truncated expansion")
    p.add_argument("--n-start", type=int, required=True)
    p.add_argument("--n-end", type=int, required=True)
    p.add_argument("--step", type=int, default=100)
    p.add_argument("--L", type=int, required=True)
    p.set_defaults(fn=cmd_residual)

    p = sub.add_parser("figure", parents=[common], help="rescaled-residual dataset")
    p.add_argument("--n-start", type=int, required=True)
    p.add_argument("--n-end", type=int, required=True)
    p.add_argument("--step", type=int, default=1)
    p.set_defaults(fn=cmd_figure)

    p = sub.add_parser("oracle", parents=[common],
                       help="divisor-sum reconstruction of g_n - 1/n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m-max", type=int, default=40)
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("verify", parents=[common], help="run the property suite")
    p.add_argument("--fast", action="store_true")
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cache_path = args.bernoulli_cache or os.environ.get(ENV_CACHE)
    try:
        if cache_path:
            load_bernoulli_cache(cache_path)
        sys.stdout.write(args.fn(args))
        if cache_path:
            save_bernoulli_cache(cache_path)
    except (InsufficientPrecisionError, AccuracyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InvalidArgumentError, DomainError, CacheFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CotanasymError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
