"""Command-line front end.

Exit codes: 0 success, 2 verification mismatch, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from contextlib import contextmanager
from fractions import Fraction

import numpy as np

from . import figures
from .closed_form import dof_theorem1, dof_theorem2
from .core import FdConfig, HdSplitConfig, UnsupportedRegimeError, format_decimal, format_rational
from .grid import check_grid
from .ia_n1 import DEFAULT_TOL, monte_carlo
from .lp import solve_achievable, solve_converse
from .rate_sim import estimate_dof_slope, expected_dof

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _count(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def _positive(text: str) -> int:
    value = _count(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _seed(text: str) -> int:
    value = _count(text)
    if value >= 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return value


def _exact(x: Fraction) -> str:
    return f"{x.numerator}" if x.denominator == 1 else format_rational(x)


def _point(p) -> str:
    return "(" + ", ".join(format_rational(v) for v in p) + ")"


@contextmanager
def _output(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


# -- dof ---------------------------------------------------------------------

def cmd_dof(args) -> int:
    lines = []
    status = EXIT_OK
    if args.fd_users:
        if args.N is None:
            raise UsageError("--fd-users needs -N")
        cfg = FdConfig(args.M1, args.M2, args.N)
        value = dof_theorem2(cfg)
        lines.append(f"network: FD-BS / FD-user (M1={cfg.m1}, M2={cfg.m2}, N={cfg.n})")
        lines.append(f"sum DoF: {_exact(value)} (= {format_rational(value)}) = {format_decimal(value)}")
    else:
        if args.N1 is None or args.N2 is None:
            raise UsageError("--hd-users needs -N1 and -N2")
        cfg = HdSplitConfig(args.M1, args.M2, args.N1, args.N2)
        b = dof_theorem1(cfg)
        lines.append(
            f"network: FD-BS / HD-user (M1={cfg.m1}, M2={cfg.m2}, N1={cfg.n1}, N2={cfg.n2})"
        )
        lines.append(
            f"sum DoF: {_exact(b.value)} (= {format_rational(b.value)}) = {format_decimal(b.value)}"
        )
        lines.append(f"binding: {b.binding_term}")
        if cfg.n1 and cfg.n2:
            ach, con = solve_achievable(cfg), solve_converse(cfg)
            lines.append(
                f"achievable LP: {format_rational(ach.value)} at loads {_point(ach.argmax.as_tuple())}"
            )
            lines.append(f"converse LP: {format_rational(con.value)} at {_point(con.argmax)}")
            agree = ach.value == con.value == b.value
            lines.append(f"agreement: {'yes' if agree else 'NO'}")
            if not agree:
                status = EXIT_MISMATCH
        else:
            lines.append("LPs: not defined without users on both sides")
    with _output(args.out) as fh:
        fh.write("\n".join(lines) + "\n")
    return status


# -- verify-grid -------------------------------------------------------------

def cmd_verify_grid(args) -> int:
    report = check_grid(args.bound)
    noun = "config" if report.configs == 1 else "configs"
    mismatch = "mismatch" if report.total_mismatches == 1 else "mismatches"
    lines = [f"{report.configs} {noun}, {report.total_mismatches} {mismatch}"]
    for name, count in report.mismatches.items():
        line = f"  {name}: {count}"
        if name in report.first_counterexample:
            c = report.first_counterexample[name]
            line += f" (first: M1={c.m1} M2={c.m2} N1={c.n1} N2={c.n2})"
        lines.append(line)
    lines.append(
        f"  info: self-interference below HD-only in {report.si_below_hd} of {report.configs}"
    )
    with _output(args.out) as fh:
        fh.write("\n".join(lines) + "\n")
    return EXIT_MISMATCH if report.total_mismatches else EXIT_OK


# -- figure ------------------------------------------------------------------

def _figure_rows(args) -> tuple[list[str], list[dict]]:
    name = args.name
    if name == "ex1":
        rows = figures.symmetric_sweep(args.M, args.n_min or 1, args.n_max or 20)
        keys = ["n"]
    elif name == "fd-sweep":
        rows = figures.fd_sweep(args.M1, args.M2, args.ratio, args.n_min or 1, args.n_max or 25)
        keys = ["n1", "n2", "n"]
    elif name == "split-curve":
        rows = figures.split_curve_table(args.M1, args.M2, args.N)
        keys = ["n1", "n2"]
    else:
        rows = figures.optimal_split_table(args.M1, args.M2, args.n_min or 1, args.n_max or 50)
        keys = ["n"]
    return keys + list(figures.CURVES), rows


def cmd_figure(args) -> int:
    columns, rows = _figure_rows(args)
    buf = io.StringIO()
    if args.format == "csv":
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for r in rows:
            writer.writerow(
                [format_decimal(r[c]) if isinstance(r[c], Fraction) else r[c] for c in columns]
            )
    else:
        out = [
            {
                c: (
                    {"exact": format_rational(r[c]), "decimal": format_decimal(r[c])}
                    if isinstance(r[c], Fraction)
                    else r[c]
                )
                for c in columns
            }
            for r in rows
        ]
        json.dump(out, buf, indent=2)
        buf.write("\n")
    with _output(args.out) as fh:
        fh.write(buf.getvalue())
    return EXIT_OK


# -- ia / slope --------------------------------------------------------------

def _check_single_dl_user(args):
    if args.N1 != 1:
        raise UsageError(
            "unsupported regime: only N1 = 1 has a finite-extension alignment scheme"
        )


def cmd_ia(args) -> int:
    _check_single_dl_user(args)
    r = monte_carlo(args.M1, args.M2, args.N2, args.trials, args.seed, args.tol)
    if args.format == "json":
        text = json.dumps(
            {
                "m1": r.m1, "m2": r.m2, "n2": r.n2, "trials": r.trials,
                "seed": args.seed, "tol": r.tol, "failures": r.failures,
                "failed_trials": r.failed_trials, "max_residual": r.max_residual,
                "min_interference_rank": r.min_interference_rank,
                "min_dl_rank": r.min_dl_rank, "min_bs_rank": r.min_bs_rank,
                "symbols_per_slot": format_rational(r.symbols_per_slot),
            },
            indent=2,
        ) + "\n"
    else:
        text = (
            f"{r.trials} trials, {r.failures} failures, max residual {r.max_residual:.3e}"
            f" (tol {r.tol:g}), symbols/slot = {_exact(r.symbols_per_slot)}\n"
            f"min ranks: interference {r.min_interference_rank}/{r.m2},"
            f" DL user {r.min_dl_rank}/{r.n2}, BS {r.min_bs_rank}/{r.m2 * r.n2}\n"
        )
        if r.failed_trials:
            text += "failed trials: " + " ".join(map(str, r.failed_trials)) + "\n"
    with _output(args.out) as fh:
        fh.write(text)
    return EXIT_MISMATCH if r.failures else EXIT_OK


def cmd_slope(args) -> int:
    _check_single_dl_user(args)
    if args.points < 3:
        raise UsageError("--points must be at least 3")
    powers = np.logspace(args.log10_pmin, args.log10_pmax, args.points)
    est = estimate_dof_slope(args.M1, args.M2, args.N2, powers, args.seed, args.trials)
    target = expected_dof(args.M2, args.N2)
    if args.format == "json":
        text = json.dumps(
            {
                "m1": args.M1, "m2": args.M2, "n2": args.N2, "trials": args.trials,
                "seed": args.seed, "slope": est.slope, "intercept": est.intercept,
                "r_squared": est.r_squared, "expected": format_rational(target),
                "relative_error": est.relative_error(target),
                "points": [{"power": p, "sum_rate": r} for p, r in est.points],
            },
            indent=2,
        ) + "\n"
    else:
        lines = [
            f"slope {est.slope:.4f} (expected {_exact(target)} = {float(target):.4f},"
            f" relative error {est.relative_error(target):.2%})",
            f"intercept {est.intercept:.4f}, r^2 {est.r_squared:.5f}",
            "power         sum rate [bits/slot]",
        ]
        lines += [f"{p:<13.3e} {r:.6f}" for p, r in est.points]
        text = "\n".join(lines) + "\n"
    with _output(args.out) as fh:
        fh.write(text)
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fddof", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dof", help="sum DoF of one configuration")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--hd-users", action="store_true", help="FD BS with HD users (default)")
    kind.add_argument("--fd-users", action="store_true", help="FD BS with FD users")
    p.add_argument("-M1", type=_count, required=True)
    p.add_argument("-M2", type=_count, required=True)
    p.add_argument("-N1", type=_count)
    p.add_argument("-N2", type=_count)
    p.add_argument("-N", type=_count)
    p.add_argument("--out")
    p.set_defaults(func=cmd_dof)

    p = sub.add_parser("verify-grid", help="check all formula identities on [1..B]^4")
    p.add_argument("-B", "--bound", type=_positive, default=8)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify_grid)

    p = sub.add_parser("figure", help="sweep data as CSV or JSON")
    p.add_argument("name", choices=figures.FIGURES)
    p.add_argument("-M", type=_count, default=5, help="antennas per side for ex1")
    p.add_argument("-M1", type=_count, default=16)
    p.add_argument("-M2", type=_count, default=8)
    p.add_argument("-N", type=_count, default=50, help="total users for split-curve")
    p.add_argument("--ratio", type=_positive, default=2, help="N2 / N1 for fd-sweep")
    p.add_argument("--n-min", type=_positive)
    p.add_argument("--n-max", type=_positive)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_figure)

    for name, func, help_text, trials in (
        ("ia", cmd_ia, "Monte-Carlo check of the alignment construction", 100),
        ("slope", cmd_slope, "empirical DoF from the rate-vs-power slope", 20),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-M1", type=_positive, default=2)
        p.add_argument("-M2", type=_count, required=True)
        p.add_argument("-N1", type=_count, default=1)
        p.add_argument("-N2", type=_positive, required=True)
        p.add_argument("--trials", type=_positive, default=trials)
        p.add_argument("--seed", type=_seed, default=0)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out")
        if name == "ia":
            p.add_argument("--tol", type=float, default=DEFAULT_TOL)
        else:
            p.add_argument("--log10-pmin", type=float, default=2.0)
            p.add_argument("--log10-pmax", type=float, default=10.0)
            p.add_argument("--points", type=int, default=9)
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, UnsupportedRegimeError, ValueError) as exc:
        print(f"fddof {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
