"""Command line interface.

    pbernoulli table --n-max 10 --p-max 3 --format csv --out table.csv
    pbernoulli verify --n-max 40 --p-max 12
    pbernoulli identity --p-max 30 --order 30
    pbernoulli poly --n-max 4 --p 2
    pbernoulli eval --p-max 8 --t=-1,-0.5,0.25,0.5,1

Every subcommand exits 0 when its checks pass, 1 when a check fails and 2 on
bad input or an unwritable output path.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import identities
from .pbern import pbern_closed_form, pbern_hypergeometric, pbern_polynomial, pbern_table
from .quadrature import DEFAULT_T_SAMPLES, QuadratureError, cross_validate
from .series import PoleError
from .tableio import table_to_csv, table_to_json

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

Method = Callable[[int, int], Sequence[Fraction]]


def _fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _emit(text: str, out_path: str | None) -> int:
    if out_path is None or out_path == "-":
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {out_path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_table(n_max: int, p_max: int, fmt: str = "csv", out_path: str | None = None) -> int:
    table = pbern_table(n_max, p_max)
    if fmt == "csv":
        text = table_to_csv(table)
    elif fmt == "json":
        text = table_to_json(table)
    else:
        print(f"error: unknown format {fmt!r}", file=sys.stderr)
        return EXIT_USAGE
    return _emit(text, out_path)


@dataclass(frozen=True)
class Mismatch:
    n: int | None
    p: int
    hypergeometric: Fraction | None
    closed_form: Fraction | None
    reason: str


def verify_grid(
    n_max: int,
    p_max: int,
    hypergeometric: Method = pbern_hypergeometric,
    closed_form: Method = pbern_closed_form,
    log: Callable[[str], None] | None = None,
) -> Mismatch | None:
    """Compare both exact methods column by column; return the first failure."""
    for p in range(p_max + 1):
        a = hypergeometric(n_max, p)
        try:
            b = closed_form(n_max, p)
        except PoleError as exc:
            if log:
                log(f"p={p}: FAIL pole at t^{exc.exponent}")
            return Mismatch(None, p, None, exc.coefficient, str(exc))
        for n, (x, y) in enumerate(zip(a, b)):
            if x != y:
                if log:
                    log(f"p={p}: FAIL at n={n}")
                return Mismatch(n, p, x, y, "values differ")
        if log:
            log(f"p={p}: ok (n=0..{n_max})")
    return None


def cmd_verify(
    n_max: int,
    p_max: int,
    hypergeometric: Method = pbern_hypergeometric,
    closed_form: Method = pbern_closed_form,
) -> int:
    mismatch = verify_grid(n_max, p_max, hypergeometric, closed_form, log=print)
    if mismatch is None:
        print(f"all {(n_max + 1) * (p_max + 1)} cells agree")
        return EXIT_OK
    if mismatch.hypergeometric is None:
        print(f"pole cancellation failed for p={mismatch.p}: {mismatch.reason}")
    else:
        print(
            f"first mismatch n={mismatch.n} p={mismatch.p}: "
            f"hypergeometric={_fmt(mismatch.hypergeometric)} "
            f"closed_form={_fmt(mismatch.closed_form)}"
        )
    return EXIT_FAIL


def cmd_identity(max_p: int = 30, max_k: int = 30, max_s: int = 30, order: int = 30) -> int:
    suites = [
        (
            "harmonic_alternating",
            [(p,) for p in range(max_p + 1)],
            identities.check_harmonic_alternating,
        ),
        (
            "binomial_ratio",
            [(k, s) for k in range(max_k + 1) for s in range(1, max_s + 1)],
            identities.check_binomial_ratio,
        ),
        (
            "vandermonde_exp",
            [(p, s, order) for p in range(max_p + 1) for s in range(p + 1)],
            identities.check_vandermonde_exp,
        ),
        (
            "harmonic_integral",
            [(n,) for n in range(max_p + 1)],
            identities.check_harmonic_integral,
        ),
    ]
    status = EXIT_OK
    for name, cases, check in suites:
        failed = [args for args in cases if not check(*args)]
        print(f"{name}: {len(cases) - len(failed)}/{len(cases)} passed")
        if failed:
            print(f"  first failure: {name}{failed[0]}")
            status = EXIT_FAIL
    return status


def cmd_poly(n_max: int, p: int, fmt: str = "text", out_path: str | None = None) -> int:
    polys = pbern_polynomial(n_max, p)
    if fmt == "text":
        text = "".join(f"{n}: {poly}\n" for n, poly in enumerate(polys))
    elif fmt == "csv":
        lines = ["n,p,power,numerator,denominator"]
        for n, poly in enumerate(polys):
            for power, c in enumerate(poly.coeffs):
                lines.append(f"{n},{p},{power},{c.numerator},{c.denominator}")
        text = "\n".join(lines) + "\n"
    elif fmt == "json":
        records = [
            {
                "n": n,
                "p": p,
                "coefficients": [
                    {"numerator": str(c.numerator), "denominator": str(c.denominator)}
                    for c in poly.coeffs
                ],
            }
            for n, poly in enumerate(polys)
        ]
        text = json.dumps(records, indent=2) + "\n"
    else:
        print(f"error: unknown format {fmt!r}", file=sys.stderr)
        return EXIT_USAGE
    return _emit(text, out_path)


def _parse_t_list(text: str) -> list[float]:
    return [float(item) for item in text.split(",") if item.strip()]


def cmd_eval(p_max: int, t_list: Sequence[float], rel_tol: float = 1e-12) -> int:
    try:
        reports = cross_validate(p_max, t_list, rel_tol)
    except QuadratureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if reports:
        print(
            f"{'p':>3} {'t':>8} {'integral':>22} {'series':>22} {'closed form':>22}"
            f" {'|int-ser|':>10} {'|int-cf|':>10}"
        )
    for r in reports:
        closed = "N/A" if r.closed_form_value is None else f"{r.closed_form_value:.17g}"
        d_closed = (
            "N/A" if r.abs_diff_integral_closed is None else f"{r.abs_diff_integral_closed:.2e}"
        )
        mark = "  FLAG" if r.flagged else ""
        print(
            f"{r.p:>3} {r.t:>8g} {r.integral_value:>22.17g} {r.series_value:>22.17g}"
            f" {closed:>22} {r.abs_diff_integral_series:>10.2e} {d_closed:>10}{mark}"
        )
    flagged = sum(r.flagged for r in reports)
    print(f"{len(reports)} reports, {flagged} above threshold")
    return EXIT_FAIL if flagged else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pbernoulli", description="Exact p-Bernoulli numbers and checks."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="emit the B(n,p) grid")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--p-max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="output path (default: stdout)")

    p = sub.add_parser("verify", help="compare the hypergeometric and closed-form routes")
    p.add_argument("--n-max", type=int, default=40)
    p.add_argument("--p-max", type=int, default=12)

    p = sub.add_parser("identity", help="run the auxiliary identity suites")
    p.add_argument("--p-max", type=int, default=30)
    p.add_argument("--k-max", type=int, default=30)
    p.add_argument("--s-max", type=int, default=30)
    p.add_argument("--order", type=int, default=30)

    p = sub.add_parser("poly", help="emit B(n,p)(x) coefficients, ascending in x")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--out", default=None)

    p = sub.add_parser("eval", help="floating-point cross-check at real t")
    p.add_argument("--p-max", type=int, default=8)
    p.add_argument(
        "--t",
        default=",".join(str(t) for t in DEFAULT_T_SAMPLES),
        help="comma-separated t values; use --t=-1,0.5 for negatives",
    )
    p.add_argument("--rel-tol", type=float, default=1e-12)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    for name in ("n_max", "p_max", "p", "k_max", "s_max", "order"):
        if getattr(args, name, 0) < 0:
            print(f"error: --{name.replace('_', '-')} must be >= 0", file=sys.stderr)
            return EXIT_USAGE

    if args.command == "table":
        return cmd_table(args.n_max, args.p_max, args.format, args.out)
    if args.command == "verify":
        return cmd_verify(args.n_max, args.p_max)
    if args.command == "identity":
        return cmd_identity(args.p_max, args.k_max, args.s_max, args.order)
    if args.command == "poly":
        return cmd_poly(args.n_max, args.p, args.format, args.out)
    if args.command == "eval":
        try:
            t_list = _parse_t_list(args.t)
        except ValueError as exc:
            print(f"error: bad --t value: {exc}", file=sys.stderr)
            return EXIT_USAGE
        if not 0 < args.rel_tol <= 1e-6:
            print("error: --rel-tol must lie in (0, 1e-6]", file=sys.stderr)
            return EXIT_USAGE
        return cmd_eval(args.p_max, t_list, args.rel_tol)
    raise AssertionError(args.command)


if __name__ == "__main__":
    sys.exit(main())
