"""Command-line interface.

Commands: ``sznagy`` (single-map suite), ``ando`` (two-map suite), ``gen``
(write a problem file from a recipe).  Exit codes: 0 all checks pass, 1 a
check failed (report still written), 2 input error, 3 non-commuting input.
Reports are byte-identical across runs on the same input and flags.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .dilation import NotCommuting, ando, truncated_matrix
from .fields import RATIONAL, FieldSpec, gf
from .pairs import InvalidRecipe, PairRecipe, gen_pair
from .problems import ProblemError, load_problem, mat_to_grid, problem_to_dict, resolve_pair
from .verify import CheckParams, Report, check_ando, check_sznagy

__all__ = ["main", "entry"]

EXIT_PASS = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_NOT_COMMUTING = 3


def _parse_field(text: str) -> FieldSpec:
    if text == "rational":
        return RATIONAL
    m = re.fullmatch(r"gf:?([0-9]+)", text)
    if m:
        try:
            return gf(int(m.group(1)))
        except ValueError as exc:
            raise ProblemError(str(exc)) from exc
    raise ProblemError(f"unknown field {text!r}; use 'rational' or 'gfP' with P prime")


def _add_check_flags(sub: argparse.ArgumentParser):
    sub.add_argument("--input", required=True, help="problem file (JSON)")
    sub.add_argument("--out", help="report destination (default: stdout)")
    sub.add_argument("--max-power", type=int, default=4, metavar="N",
                     help="largest exponent checked (default 4)")
    sub.add_argument("--trunc", type=int, default=5, metavar="K",
                     help="largest truncation level checked (default 5)")
    sub.add_argument("--trials", type=int, default=8,
                     help="random trial vectors per check (default 8)")
    sub.add_argument("--seed", type=int, default=0, help="trial-vector seed (default 0)")
    sub.add_argument("--format", choices=("json", "text"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exactdilation",
        description="Exact dilation of linear maps, with full verification reports.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sznagy = sub.add_parser("sznagy", help="single-map dilation suite")
    _add_check_flags(p_sznagy)

    p_ando = sub.add_parser("ando", help="two-commuting-maps dilation suite")
    _add_check_flags(p_ando)
    p_ando.add_argument("--dump-operators", type=int, metavar="K",
                        help="also write truncated U, V and the exchange map at level K")

    p_gen = sub.add_parser("gen", help="generate a commuting-pair problem file")
    p_gen.add_argument("--kind", required=True,
                       choices=("polynomial", "upper_triangular", "diagonal", "idempotent"))
    p_gen.add_argument("--dim", type=int, required=True)
    p_gen.add_argument("--field", default="rational", help="'rational' or 'gfP' (default rational)")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--degree", type=int, default=3)
    p_gen.add_argument("--height", type=int, default=5)
    p_gen.add_argument("--out", help="problem destination (default: stdout)")
    return parser


def _params(args) -> CheckParams:
    try:
        return CheckParams(max_power=args.max_power, max_trunc=args.trunc,
                           trials=args.trials, seed=args.seed)
    except ValueError as exc:
        raise ProblemError(str(exc)) from exc


def _render_text(report: Report) -> str:
    meta = report.meta
    field = meta["field"]
    field_label = "rational" if field["kind"] == "rational" else f"gf({field['modulus']})"
    lines = [f"suite: {meta['kind']}  field: {field_label}  dim: {meta['dim']}"]
    params = meta["params"]
    lines.append("params: " + "  ".join(f"{k}={params[k]}" for k in sorted(params)))
    for rec in report.checks:
        lines.append(f"{'PASS' if rec.passed else 'FAIL'} {rec.name}")
        if rec.counterexample is not None:
            lines.append(f"  counterexample: {json.dumps(rec.counterexample, sort_keys=True)}")
    lines.append(f"overall: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"


def _write(text: str, out_path):
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_report(report: Report, args) -> int:
    _write(report.to_json() if args.format == "json" else _render_text(report), args.out)
    return EXIT_PASS if report.passed else EXIT_CHECK_FAILED


def _cmd_sznagy(args) -> int:
    problem = load_problem(args.input)
    t, s = resolve_pair(problem)
    if problem.S is not None:
        print("warning: 'S' present in input is ignored by the single-map suite",
              file=sys.stderr)
    report = check_sznagy(t, _params(args), recipe=problem.recipe)
    return _emit_report(report, args)


def _cmd_ando(args) -> int:
    problem = load_problem(args.input)
    t, s = resolve_pair(problem)
    if s is None:
        raise ProblemError("the two-map suite needs both 'T' and 'S' (or a recipe)")
    if args.dump_operators is not None and args.out is None:
        raise ProblemError("--dump-operators needs --out to name the dump file")
    report = check_ando(t, s, _params(args), recipe=problem.recipe)
    status = _emit_report(report, args)
    if args.dump_operators is not None:
        ops = ando(t, s)
        k = args.dump_operators
        dump = {"trunc": k,
                "U": mat_to_grid(truncated_matrix("U", ops, k)),
                "V": mat_to_grid(truncated_matrix("V", ops, k)),
                "v": mat_to_grid(ops.v)}
        _write(json.dumps(dump, sort_keys=True, indent=2) + "\n",
               str(args.out) + ".operators.json")
    return status


def _cmd_gen(args) -> int:
    field = _parse_field(args.field)
    try:
        recipe = PairRecipe(kind=args.kind, dim=args.dim, field=field, seed=args.seed,
                            degree=args.degree, height=args.height)
        t, s = gen_pair(recipe)
    except InvalidRecipe as exc:
        raise ProblemError(str(exc)) from exc
    _write(json.dumps(problem_to_dict(field, t, s), sort_keys=True, indent=2) + "\n",
           args.out)
    return EXIT_PASS


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "sznagy":
            return _cmd_sznagy(args)
        if args.command == "ando":
            return _cmd_ando(args)
        return _cmd_gen(args)
    except ProblemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except NotCommuting as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_COMMUTING


def entry():  # console-script hook
    raise SystemExit(main())
