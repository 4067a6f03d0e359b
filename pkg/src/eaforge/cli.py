"""Command line front end.

Exit statuses: 0 success, 2 invalid input or unmet precondition, 3 claim
mismatch or failed verification, 4 distance budget exceeded, 1 internal
inconsistency.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .codes import LinearCode, hull_dim, is_dual_containing, is_lcd
from .construct import NAMES, build, derive_report
from .distance import DEFAULT_BUDGET
from .errors import BudgetExceeded, ConditionViolated, ForgeError, ParseError
from .grs import GrsSpec
from .serialize import load_code, looks_like_grs, read_json

MIN_BUDGET = 10**4


def _budget(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < MIN_BUDGET:
        raise argparse.ArgumentTypeError(f"budget must be at least {MIN_BUDGET}")
    return value


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _has_quadratic(C: LinearCode) -> bool:
    return C.field.m % 2 == 0


def code_info(C: LinearCode, budget: int) -> str:
    parts = [f"n={C.n}", f"k={C.k}"]
    try:
        d = C.distance(budget)
        parts.append(f"d={'-' if d is None else d}")
    except BudgetExceeded as exc:
        parts.append(f"d=? ({exc.lower or 1}<=d<={exc.upper}, budget exceeded)")
    parts.append(f"hull_e={hull_dim(C)}")
    if _has_quadratic(C):
        parts.append(f"hull_h={hull_dim(C, 'hermitian')}")
    parts.append(f"dual_containing={str(is_dual_containing(C)).lower()}")
    parts.append(f"lcd={str(is_lcd(C)).lower()}")
    if _has_quadratic(C):
        parts.append(f"dual_containing_h={str(is_dual_containing(C, 'hermitian')).lower()}")
        parts.append(f"lcd_h={str(is_lcd(C, 'hermitian')).lower()}")
    return " ".join(parts)


def cmd_info(args: argparse.Namespace) -> int:
    C = load_code(args.input)
    _emit(code_info(C, args.budget) + "\n", args.output)
    return 0


def cmd_derive(args: argparse.Namespace) -> int:
    C = load_code(args.input)
    rep = derive_report(C, args.form, args.budget)
    _emit(rep.dumps(), args.output)
    print(f"{rep.eaqecc} {rep.eaqecc_dual}", file=sys.stderr)
    rep.enforce(args.mode)
    return 0


def _construct_options(args: argparse.Namespace) -> dict:
    opts: dict = {"q": args.q, "k": args.k, "r": args.r, "c": args.c, "s": args.s, "extra_point": args.extra_point}
    if args.input:
        obj = read_json(args.input)
        if looks_like_grs(obj):
            opts["grs"] = GrsSpec.from_json(obj)
        else:
            opts["code"] = load_code(args.input)
    return opts


def cmd_construct(args: argparse.Namespace) -> int:
    rep = build(args.name, args.budget, **_construct_options(args))
    text = rep.dumps()
    _emit(text, args.output)
    if rep.eaqecc is not None:
        print(f"{rep.construction}: {rep.eaqecc}", file=sys.stderr)
    for c in rep.failures():
        print(f"claim {c.name}: claimed {c.claimed}, computed {c.computed}", file=sys.stderr)
    if args.figure and args.name == "grs-hull":
        from .plotting import figure_path, hull_plot

        if not args.output:
            raise ConditionViolated("--figure needs -o so the figure has a place to go")
        fig = hull_plot(rep.extra["family"], figure_path(args.output), f"q={args.q}, r={args.r}")
        print(f"figure: {fig}", file=sys.stderr)
    rep.enforce(args.mode)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    from .verify import verify_report

    summary = verify_report(read_json(args.report), args.budget)
    print(f"ok {summary['construction']}: {summary['claims']} claims, {summary['mismatches']} recorded mismatches")
    return 0


def cmd_tabulate(args: argparse.Namespace) -> int:
    from .tabulate import mds_grs_table, stderr_log, to_csv

    if args.family != "mds-grs":
        raise ParseError(f"unknown table {args.family!r}")
    if args.q is None:
        raise ConditionViolated("tabulate mds-grs needs --q")
    rows = mds_grs_table(args.q, args.budget, stderr_log)
    _emit(to_csv(rows), args.output)
    if args.figure:
        from .plotting import figure_path, rate_plot

        if not args.output:
            raise ConditionViolated("--figure needs -o so the figure has a place to go")
        fig = rate_plot(rows, figure_path(args.output), f"GRS families, q={args.q}")
        print(f"figure: {fig}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=_budget, default=DEFAULT_BUDGET, help="distance search budget (>= 1e4)")
    common.add_argument("--mode", choices=("strict", "audit"), default="strict")
    common.add_argument("--seed", type=int, default=0, help="accepted for harness compatibility; nothing here is random")
    common.add_argument("-o", "--output", help="write the result here instead of stdout")

    p = argparse.ArgumentParser(prog="eaforge", description="Entanglement-assisted quantum codes from classical codes.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("info", parents=[common], help="parameters, hulls and flags of a code file")
    s.add_argument("--input", required=True)
    s.set_defaults(func=cmd_info)

    s = sub.add_parser("derive", parents=[common], help="both hull-derived EAQECCs of a code")
    s.add_argument("--input", required=True)
    s.add_argument("--form", choices=("euclidean", "hermitian"), default="euclidean")
    s.set_defaults(func=cmd_derive)

    s = sub.add_parser("construct", parents=[common], help="run a named construction")
    s.add_argument("name", choices=NAMES)
    s.add_argument("--input", help="code file, or a GRS spec for grs-mds")
    for flag in ("--q", "--k", "--r", "--c", "--s"):
        s.add_argument(flag, type=int)
    s.add_argument("--extra-point", action="store_true", help="grs-hull: add the point 0")
    s.add_argument("--figure", action="store_true", help="grs-hull: plot hull dimensions next to the report")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("verify", parents=[common], help="recompute a stored report")
    s.add_argument("report")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("tabulate", parents=[common], help="CSV of realizable parameters")
    s.add_argument("family", choices=("mds-grs",))
    s.add_argument("--q", type=int)
    s.add_argument("--figure", action="store_true", help="plot rate against net rate next to the CSV")
    s.set_defaults(func=cmd_tabulate)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc} (lower={exc.lower}, upper={exc.upper})", file=sys.stderr)
        return exc.exit_code
    except ForgeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
