"""Command-line surface: construct, solve, verify, table, audit, render.

Machine output goes to standard output (or --out), diagnostics to standard
error. Every command's output is a pure function of its arguments. Exit
codes: 0 success, 2 usage error, 3 validation failure, 4 enumeration budget
exceeded, 5 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .assignment import RomanAssignment, is_valid_rdf
from .construction import ceil_8n_over_7, construct_rdf, gamma_formula
from .discharging import CSV_HEADER, lemma_audit, lower_bound_audit
from .errors import (
    BudgetError,
    InternalCheckError,
    InvalidAssignmentError,
    ParameterError,
    RomanPetersenError,
    SchemaError,
)
from .assignment import normalize
from .petersen import PetersenGraph, build_graph
from .solver import METHOD_BRUTE, METHOD_DP, solve_brute, solve_dp

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVALID = 3
EXIT_BUDGET = 4
EXIT_INTERNAL = 5

DEFAULT_DP_CAP = 30

_FILL = {0: "white", 1: "grey", 2: "black"}


def render_dot(g: PetersenGraph, f: RomanAssignment) -> str:
    """Deterministic DOT text: 2-labeled vertices dark, 1-labeled grey, 0 white."""
    report = is_valid_rdf(g, f)
    if not report.valid:
        raise InvalidAssignmentError(
            f"refusing to render an invalid assignment; undominated: "
            f"{[str(w) for w in report.violations]}"
        )
    lines = [f'graph "P({g.n},{g.k})" {{', "  node [shape=circle, style=filled];"]
    for w in g.vertices:
        label = f.label(w)
        font = ", fontcolor=white" if label == 2 else ""
        lines.append(f"  {w} [fillcolor={_FILL[label]}{font}];")
    for a, b in g.iter_edges():
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _load_assignment(path: str) -> RomanAssignment:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParameterError(f"cannot read {path}: {exc}") from exc
    f = RomanAssignment.from_json(text)
    if f.n < 5:
        raise SchemaError("n", f"P(n, 2) assignments need n >= 5, got {f.n}")
    return f


def _cmd_construct(args) -> int:
    f = construct_rdf(args.n)
    if args.format == "json":
        _emit(f.to_json(), args.out)
    else:
        _emit(render_dot(build_graph(args.n, 2), f), args.out)
    return EXIT_OK


def _cmd_solve(args) -> int:
    result = solve_brute(args.n) if args.method == METHOD_BRUTE else solve_dp(args.n)
    _emit(json.dumps(result.to_json_dict(), indent=2) + "\n", args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    f = _load_assignment(args.file)
    g = build_graph(f.n, 2)
    report = is_valid_rdf(g, f)
    doc = {
        "valid": report.valid,
        "n": f.n,
        "weight": f.weight(),
        "violations": [str(w) for w in report.violations],
    }
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK if report.valid else EXIT_INVALID


@dataclass(frozen=True)
class TableRow:
    """One reproduction-table line; match holds iff the solver ran and agreed."""

    n: int
    formula: int
    dp_optimum: int | None
    gamma: int

    @property
    def match(self) -> bool:
        return self.dp_optimum is not None and self.dp_optimum == self.formula

    def to_csv(self) -> str:
        dp_field = "" if self.dp_optimum is None else str(self.dp_optimum)
        return f"{self.n},{self.formula},{dp_field},{self.gamma},{str(self.match).lower()}"


def _cmd_table(args) -> int:
    start, stop = args.start, args.stop
    if start < 5:
        raise ParameterError(f"table starts at n >= 5, got {start}")
    if stop < start:
        raise ParameterError(f"empty range: --from {start} > --to {stop}")
    lines = ["n,formula,dp_optimum,gamma,match"]
    for n in range(start, stop + 1):
        row = TableRow(
            n=n,
            formula=ceil_8n_over_7(n),
            dp_optimum=solve_dp(n).optimum if n <= args.dp_cap else None,
            gamma=gamma_formula(n),
        )
        lines.append(row.to_csv())
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_audit(args) -> int:
    n = args.n
    if n < 5:
        raise ParameterError(f"audit defined for n >= 5, got {n}")
    g = build_graph(n, 2)
    result = solve_dp(n)
    witness = normalize(g, result.witness)
    lemma_report = lemma_audit(g, witness)
    lower_report = None
    if n >= 7:
        lower_report = lower_bound_audit(g, witness)
    else:
        print(f"audit: lower-bound section skipped, needs n >= 7 (got {n})", file=sys.stderr)
    passed = lemma_report.passed and (lower_report is None or lower_report.passed)
    if args.format == "json":
        doc = {
            "n": n,
            "optimum": result.optimum,
            "witness": witness.to_json_dict(),
            "lemma_report": lemma_report.to_json_dict(),
            "lower_bound_report": lower_report.to_json_dict() if lower_report else None,
            "passed": passed,
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        lines = ["section," + CSV_HEADER]
        lines.extend("lemma," + row for row in lemma_report.csv_rows())
        if lower_report is not None:
            lines.extend("lower_bound," + row for row in lower_report.csv_rows())
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if passed else EXIT_INVALID


def _cmd_render(args) -> int:
    if args.file is not None:
        f = _load_assignment(args.file)
        g = build_graph(f.n, 2)
    else:
        f = construct_rdf(args.n)
        g = build_graph(args.n, 2)
    _emit(render_dot(g, f), args.out)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="roman-petersen",
        description="Exact Roman domination toolkit for generalized Petersen graphs P(n, 2).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit the explicit optimal assignment for n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("solve", help="compute the exact optimum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=(METHOD_DP, METHOD_BRUTE), default=METHOD_DP)
    p.add_argument("--out", default=None)
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("verify", help="validate an assignment JSON file")
    p.add_argument("file")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("table", help="CSV of formula vs solver optimum per n")
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--dp-cap", dest="dp_cap", type=int, default=DEFAULT_DP_CAP)
    p.add_argument("--out", default=None)
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("audit", help="solve, normalize and run the window audits")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=_cmd_audit)

    p = sub.add_parser("render", help="DOT drawing of an assignment")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--n", type=int, help="render the explicit construction for n")
    source.add_argument("--file", help="render an assignment JSON file")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=_cmd_render)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (SchemaError, InvalidAssignmentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalCheckError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except RomanPetersenError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def run() -> None:
    """Console-script entry point."""
    raise SystemExit(main())
