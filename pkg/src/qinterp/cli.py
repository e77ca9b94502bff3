"""Command line front end for tables, knot expansions and unified invariants."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence

from .cache import cached_matrix
from .errors import QInterpError, TableValidationError
from .habiro import DEFAULT_TRUNCATION, HabiroElement, eval_root, taylor_at_1
from .interp import build_c_matrix, build_d_matrix, schur_coefficients
from .knotcyclo import a_coeffs, builtin_table, ingest_table, unified_invariant, unknot_table
from .knotcyclo.kirby import coverage, divisibility_exponent, knot_pprime_value
from .knotcyclo.tables import BUILTIN_KNOTS, KnotTable
from .partitions import Partition, sub_partitions
from .rendering import render_coefficients, render_matrix, render_rows, render_schur_expansion, split_columns
from .selftest import GOLDEN_PATH, run_selftest
from .serialization import (
    CycloPayload,
    ErrorPayload,
    HabiroPayload,
    LaurentPayload,
    MatrixPayload,
    dump_json,
)

TABLE_COLUMNS = 5


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _sign(text: str) -> int:
    signs = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1}
    if text not in signs:
        raise argparse.ArgumentTypeError(f"surgery sign must be + or -, got {text!r}")
    return signs[text]


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cache-dir", type=Path, default=None, help="Overrides QINTERP_CACHE.")
    common.add_argument("--no-cache", action="store_true", help="Recompute instead of reading cached matrices.")
    common.add_argument("--verbose", action="store_true", help="Log progress at INFO level.")

    knot = argparse.ArgumentParser(add_help=False)
    source = knot.add_mutually_exclusive_group()
    source.add_argument("--knot", choices=sorted(BUILTIN_KNOTS), default="fig8")
    source.add_argument("--input", type=Path, help="Knot table JSON to ingest instead of a builtin knot.")

    parser = argparse.ArgumentParser(description="Interpolation polynomials and cyclotomic expansions at q = t.")
    commands = parser.add_subparsers(dest="command", required=True)

    tables = commands.add_parser("tables", parents=[common], help="Schur expansions and the C and D matrices.")
    tables.add_argument("--N", type=_positive, default=2)
    tables.add_argument("--bound", type=_partition, default=Partition.of(3, 3))

    fpoly = commands.add_parser("fpoly", parents=[common], help="Schur expansion of one F_lambda.")
    fpoly.add_argument("--N", type=_positive, default=2)
    fpoly.add_argument("--lambda", dest="partition", type=_partition, required=True)

    expand = commands.add_parser("expand-knot", parents=[common, knot], help="Cyclotomic coefficients a_lambda.")
    expand.add_argument("--N", type=_positive, default=2)
    expand.add_argument("--bound", type=_partition, default=Partition.of(2, 1))
    expand.add_argument("--route", choices=("d-matrix", "substitution", "both"), default="both")

    unified = commands.add_parser("unified", parents=[common, knot], help="Truncated unified invariant of a surgery.")
    unified.add_argument("--N", type=_positive, default=2)
    unified.add_argument("--sign", type=_sign, default=1)
    unified.add_argument("--trunc", type=_positive, default=DEFAULT_TRUNCATION)

    for name, flag, help_text in (
        ("eval-root", "--order", "Value of a Habiro element at a primitive root of unity."),
        ("taylor", "--digits", "Taylor coefficients of a Habiro element at q = 1."),
    ):
        habiro = commands.add_parser(name, parents=[common], help=help_text)
        habiro.add_argument(flag, dest="amount", type=int, required=True)
        element = habiro.add_mutually_exclusive_group()
        element.add_argument("--knot", choices=sorted(BUILTIN_KNOTS), default="unknot")
        element.add_argument("--input", type=Path, help="Habiro element JSON.")
        habiro.add_argument("--N", type=_positive, default=2)
        habiro.add_argument("--sign", type=_sign, default=1)
        habiro.add_argument("--trunc", type=_positive, default=DEFAULT_TRUNCATION)

    divisibility = commands.add_parser(
        "divisibility", parents=[common, knot], help="(q;q)_n divisibility of J_K(P'_lambda)."
    )
    divisibility.add_argument("--N", type=_positive, default=2)
    divisibility.add_argument("--lambda", dest="partition", type=_partition, required=True)

    selftest = commands.add_parser("selftest", parents=[common], help="Golden and structural checks.")
    selftest.add_argument("--golden", type=Path, default=GOLDEN_PATH)
    selftest.add_argument("--full", action="store_true", help="Include the N=3 identity on (2,2,2).")
    return parser


def _load_knot(args: argparse.Namespace, bound) -> KnotTable:
    if args.input is not None:
        return ingest_table(args.input)
    if args.knot == "unknot":
        return unknot_table(args.N, bound)
    if args.N != 2:
        raise ValueError(f"builtin knot {args.knot!r} is only tabulated at N=2")
    return builtin_table(args.knot, bound)


def _matrices(args: argparse.Namespace):
    use_cache = not args.no_cache
    c_matrix = cached_matrix(
        "C", args.N, args.bound, lambda: build_c_matrix(args.N, args.bound), args.cache_dir, use_cache
    )
    d_matrix = cached_matrix(
        "D", args.N, args.bound, lambda: build_d_matrix(args.N, args.bound), args.cache_dir, use_cache
    )
    return c_matrix, d_matrix


def _check_length(partition: Partition, nvars: int) -> None:
    if partition.length > nvars:
        raise ValueError(f"{partition} has more than {nvars} parts")


def _run_tables(args: argparse.Namespace) -> str:
    _check_length(args.bound, args.N)
    ideal = [p for p in sub_partitions(args.bound) if p.length <= args.N]
    expansions = {p: schur_coefficients(p, args.N) for p in ideal}
    c_matrix, d_matrix = _matrices(args)
    if args.format == "json":
        return dump_json(
            {
                "schur": {
                    p.key: {mu.key: value.to_json() for mu, value in sorted(coeffs.items()) if not value.is_zero}
                    for p, coeffs in expansions.items()
                },
                "C": MatrixPayload.from_value(c_matrix).model_dump(mode="json"),
                "D": MatrixPayload.from_value(d_matrix).model_dump(mode="json"),
            }
        )
    sections = [render_schur_expansion(p, expansions[p]) for p in ideal]
    for title, matrix in (("C", c_matrix), ("D", d_matrix)):
        for columns in split_columns(matrix.partitions, TABLE_COLUMNS):
            sections.append(f"\n{title} matrix, N={args.N}\n" + render_matrix(matrix, columns=columns))
    return "\n".join(sections)


def _run_fpoly(args: argparse.Namespace) -> str:
    _check_length(args.partition, args.N)
    coefficients = {mu: value for mu, value in schur_coefficients(args.partition, args.N).items() if not value.is_zero}
    if args.format == "json":
        return dump_json(
            {
                "N": args.N,
                "lambda": args.partition.to_json(),
                "schur": {mu.key: LaurentPayload.from_value(v).model_dump() for mu, v in sorted(coefficients.items())},
            }
        )
    return render_schur_expansion(args.partition, coefficients)


def _run_expand(args: argparse.Namespace) -> str:
    table = _load_knot(args, args.bound)
    coeffs = a_coeffs(table, args.bound, route=args.route)
    if args.format == "json":
        return dump_json(CycloPayload.from_value(coeffs))
    return render_coefficients(f"a_lambda({table.name}), N={table.nvars}", coeffs.coeffs)


def _surgery(args: argparse.Namespace) -> HabiroElement:
    table = _load_knot(args, coverage(args.N, args.trunc) - 1)
    return unified_invariant(table, args.sign, args.trunc)


def _run_unified(args: argparse.Namespace) -> str:
    element = _surgery(args)
    if args.format == "json":
        return dump_json(HabiroPayload.from_value(element))
    return f"I({args.knot if args.input is None else args.input}, {args.sign:+d}) = {element}"


def _habiro_element(args: argparse.Namespace) -> HabiroElement:
    if args.input is None:
        return _surgery(args)
    return HabiroPayload.model_validate_json(Path(args.input).read_text(encoding="utf-8")).to_value()


def _run_eval_root(args: argparse.Namespace) -> str:
    residue = eval_root(_habiro_element(args), args.amount)
    if args.format == "json":
        return dump_json(residue.to_json())
    return str(residue)


def _run_taylor(args: argparse.Namespace) -> str:
    digits = taylor_at_1(_habiro_element(args), args.amount)
    if args.format == "json":
        return dump_json({"digits": [str(d) for d in digits]})
    return " ".join(map(str, digits))


def _run_divisibility(args: argparse.Namespace) -> str:
    _check_length(args.partition, args.N)
    table = _load_knot(args, args.partition)
    coeffs = a_coeffs(table, args.partition, route="substitution")
    rows: List[Dict[str, object]] = []
    for partition in coeffs.partitions:
        value = knot_pprime_value(coeffs, partition)
        rows.append({"lambda": partition, "J(P')": value, "n": divisibility_exponent(value)})
    if args.format == "json":
        return dump_json(
            [
                {"lambda": row["lambda"].to_json(), "value": row["J(P')"].to_json(), "n": row["n"]}  # type: ignore[union-attr]
                for row in rows
            ]
        )
    return render_rows(["lambda", "J(P')", "n"], rows)


def _run_selftest(args: argparse.Namespace) -> int:
    report = run_selftest(args.golden, full=args.full)
    if args.format == "json":
        print(dump_json(report.to_dict()))
    else:
        for check in report.checks:
            print(f"{'ok' if check.ok else 'FAIL'}  {check.name}")
            for failure in check.failures:
                print(f"      {failure}")
    return 0 if report.ok else 1


HANDLERS = {
    "tables": _run_tables,
    "fpoly": _run_fpoly,
    "expand-knot": _run_expand,
    "unified": _run_unified,
    "eval-root": _run_eval_root,
    "taylor": _run_taylor,
    "divisibility": _run_divisibility,
}


def _error(payload: Mapping[str, object]) -> int:
    print(dump_json(ErrorPayload.model_validate(dict(payload))), file=sys.stderr)
    return 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")

    try:
        if args.command == "selftest":
            return _run_selftest(args)
        print(HANDLERS[args.command](args))
    except (QInterpError, TableValidationError) as exc:
        return _error(exc.to_dict())
    except (ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


__all__ = ["build_parser", "main"]


if __name__ == "__main__":  # pragma: no cover - manual invocation helper
    raise SystemExit(main())
