"""Command-line front end.

Subcommands: poly, moment, decompose, value, scan, verify.  stdout carries
machine-parseable CSV or JSON only; diagnostics and progress go to stderr.
Exit codes: 0 success, 1 verification failure, 2 usage or validation error.

Desk-scale defaults: 30 digits of precision, 10**5 Monte Carlo samples.
The decomposition cache path comes from --cache or the ZETALAB_CACHE
environment variable; the cache stores exact rationals, so cached and
fresh results compare equal exactly.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

import mpmath

from .cache import DecompositionCache, cache_path_from_env
from .decomp import decompose, decomposition_report, rationality_criterion
from .polys import Poly, legendre_coeffs
from .moments import moment_closed_form, moment_from_coeffs
from .serialize import poly_to_strings
from .verify import crosscheck, eval_combination

__all__ = ["main"]


class UsageError(Exception):
    pass


def _parse_coeffs(text: str) -> Poly:
    try:
        coeffs = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError("--coeffs must be a comma-separated list of integers")
    p = Poly(coeffs)
    if p.is_zero:
        raise UsageError("--coeffs describes the zero polynomial")
    return p


def _pick_poly(args) -> tuple[Poly, int | None]:
    if args.coeffs is not None and args.n is not None:
        raise UsageError("give either --n or --coeffs, not both")
    if args.coeffs is not None:
        return _parse_coeffs(args.coeffs), None
    if args.n is None:
        raise UsageError("one of --n or --coeffs is required")
    if args.n < 0:
        raise UsageError("n must be >= 0")
    return legendre_coeffs(args.n), args.n


def _cache_from(args) -> DecompositionCache | None:
    path = args.cache if args.cache is not None else cache_path_from_env()
    return DecompositionCache(path) if path else None


def _cached_decompose(poly: Poly, r: int, v: int, cache: DecompositionCache | None):
    if cache is not None:
        hit = cache.get(poly, r, v)
        if hit is not None:
            return hit
    combo = decompose(poly, r, v)
    if cache is not None:
        cache.put(poly, r, v, combo)
    return combo


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _csv_writer():
    return csv.writer(sys.stdout, lineterminator="\r\n")


# -- subcommand handlers -----------------------------------------------------


def _cmd_poly(args) -> int:
    if args.n is None or args.n < 0:
        raise UsageError("n must be >= 0")
    coeffs = poly_to_strings(legendre_coeffs(args.n))
    if args.format == "csv":
        _csv_writer().writerow(coeffs)
    else:
        _emit_json(coeffs)
    return 0


def _cmd_moment(args) -> int:
    poly, n = _pick_poly(args)
    if args.closed_form and n is None:
        raise UsageError("--closed-form applies to --n family members only")
    m = moment_closed_form(n) if args.closed_form else moment_from_coeffs(poly)
    obj = {
        "numerator": poly_to_strings(m.num),
        "denominator": poly_to_strings(m.den),
    }
    if args.format == "csv":
        w = _csv_writer()
        w.writerow(["part", "coefficients"])
        w.writerow(["numerator", json.dumps(obj["numerator"])])
        w.writerow(["denominator", json.dumps(obj["denominator"])])
    else:
        _emit_json(obj)
    return 0


_REPORT_COLUMNS = [
    "n", "r", "v", "zeta", "constant", "A", "B", "G", "D",
    "div_lcm_n", "div_lcm_n1", "structure_mismatch",
]


def _cmd_decompose(args) -> int:
    poly, n = _pick_poly(args)
    cache = _cache_from(args)
    combo = _cached_decompose(poly, args.r, args.v, cache)
    report = decomposition_report(poly, args.r, args.v, n=n, combo=combo)
    obj = report.to_json_dict()
    if args.format == "csv":
        w = _csv_writer()
        w.writerow(_REPORT_COLUMNS)
        row = dict(obj)
        row["zeta"] = json.dumps(obj["zeta"], sort_keys=True)
        w.writerow(["" if row[c] is None else row[c] for c in _REPORT_COLUMNS])
    else:
        _emit_json(obj)
    return 0


def _cmd_value(args) -> int:
    poly, n = _pick_poly(args)
    cache = _cache_from(args)
    combo = _cached_decompose(poly, args.r, args.v, cache)
    hp = eval_combination(combo, args.prec)
    obj = {
        "n": n,
        "r": args.r,
        "v": args.v,
        "precision": args.prec,
        "value": mpmath.nstr(hp.value, args.prec),
        "error_bound": mpmath.nstr(hp.error_bound, 8),
    }
    if args.format == "csv":
        w = _csv_writer()
        w.writerow(list(obj))
        w.writerow(["" if v is None else v for v in obj.values()])
    else:
        _emit_json(obj)
    return 0


_SCAN_COLUMNS = ["n", "abs_c", "lcm_pow", "lcm_scaled", "exp_scaled", "ratio_to_prev"]


def _cmd_scan(args) -> int:
    if args.n_max < 0:
        raise UsageError("n-max must be >= 0")
    cache = _cache_from(args)
    decomposer = None
    if cache is not None:
        def decomposer(poly, r, v):
            return _cached_decompose(poly, r, v, cache)

    progress = None
    if args.progress_every:
        def progress(n, every=args.progress_every, top=args.n_max):
            if n % every == 0 or n == top:
                print(f"scan: n={n}/{top} done", file=sys.stderr)

    records = rationality_criterion(
        None, args.r, args.v, args.n_max, args.prec, progress, decomposer=decomposer
    )
    digits = args.prec

    def fmt(x):
        return mpmath.nstr(x, digits)

    if args.format == "json":
        out = []
        for rec in records:
            out.append(
                {
                    "n": rec.n,
                    "abs_c": fmt(rec.abs_c),
                    "lcm_pow": str(rec.lcm_pow),
                    "lcm_scaled": fmt(rec.lcm_scaled),
                    "exp_scaled": fmt(rec.exp_scaled),
                    "ratio_to_prev": fmt(rec.ratio_to_prev)
                    if rec.ratio_to_prev is not None
                    else None,
                }
            )
        _emit_json(out)
    else:
        w = _csv_writer()
        w.writerow(_SCAN_COLUMNS)
        for rec in records:
            w.writerow(
                [
                    rec.n,
                    fmt(rec.abs_c),
                    str(rec.lcm_pow),
                    fmt(rec.lcm_scaled),
                    fmt(rec.exp_scaled),
                    fmt(rec.ratio_to_prev) if rec.ratio_to_prev is not None else "",
                ]
            )
    return 0


def _cmd_verify(args) -> int:
    if args.n is None or args.n < 0:
        raise UsageError("n must be >= 0")
    report = crosscheck(
        args.n, args.r, args.v, precision=args.prec, samples=args.samples, seed=args.seed
    )
    _emit_json(report.to_json_dict())
    return 0 if report.passed else 1


# -- parser ------------------------------------------------------------------


def _add_rv(p, required=True):
    p.add_argument("--r", type=int, required=required, help="number of integral folds (>= 2)")
    p.add_argument("--v", type=int, required=required, help="log-weight power (>= 0)")


def _add_poly_selection(p):
    p.add_argument("--n", type=int, help="degree of the built-in family member")
    p.add_argument("--coeffs", help="comma-separated integer coefficients, lowest degree first")


def _add_format(p, default):
    p.add_argument("--format", choices=("csv", "json"), default=default)


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="zetalab",
        description=(
            "Exact zeta-value decompositions of r-fold log-weighted unit-cube "
            "integrals, with certified numerics and Monte Carlo verification. "
            "Defaults: 30-digit precision, 10**5 Monte Carlo samples."
        ),
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="print the degree-n family polynomial")
    p.add_argument("--n", type=int, required=True)
    _add_format(p, "json")
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("moment", help="print the moment rational function M(s)")
    _add_poly_selection(p)
    p.add_argument("--closed-form", action="store_true", help="use the product form (family polynomials only)")
    _add_format(p, "json")
    p.set_defaults(func=_cmd_moment)

    p = sub.add_parser("decompose", help="exact zeta-combination report")
    _add_poly_selection(p)
    _add_rv(p)
    _add_format(p, "json")
    p.add_argument("--cache", help="JSONL cache path (default: $ZETALAB_CACHE)")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("value", help="high-precision numeric value of the decomposition")
    _add_poly_selection(p)
    _add_rv(p)
    p.add_argument("--prec", type=int, default=30, help="decimal digits (default 30)")
    _add_format(p, "json")
    p.add_argument("--cache", help="JSONL cache path (default: $ZETALAB_CACHE)")
    p.set_defaults(func=_cmd_value)

    p = sub.add_parser("scan", help="criterion-quantity table over n = 0..n_max")
    _add_rv(p)
    p.add_argument("--n-max", type=int, required=True, dest="n_max")
    p.add_argument("--prec", type=int, default=30, help="decimal digits (default 30)")
    _add_format(p, "csv")
    p.add_argument("--cache", help="JSONL cache path (default: $ZETALAB_CACHE)")
    p.add_argument(
        "--seedless",
        action="store_true",
        help="marker that the scan involves no randomness (always true; kept for run scripts)",
    )
    p.add_argument(
        "--progress-every",
        type=int,
        default=0,
        help="print progress to stderr every K rows (0 = off)",
    )
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("verify", help="three-path crosscheck; exit 0 on pass, 1 on fail")
    p.add_argument("--n", type=int, required=True)
    _add_rv(p)
    p.add_argument("--prec", type=int, default=30)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=_cmd_verify)

    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
