"""Command line: ``malmquist {solve,verify,bounds}``.

Exit codes: 0 fully resolved (or VALID), 1 error, 2 some degree unresolved or
skipped, 3 INVALID from ``verify``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .bounds import certify
from .equation import KINDS, format_req
from .errors import MalmquistError
from .parser import EquationSpec, parse_ratfunc
from .report import bounds_to_dict, render_bounds, render_text, report_to_dict
from .solver import SolveOptions, solve_all, verify_solution

EXIT_OK, EXIT_ERROR, EXIT_UNRESOLVED, EXIT_INVALID = 0, 1, 2, 3


@dataclass(frozen=True)
class RunConfig:
    mode: str = "solve"
    degree_override: int | None = None
    per_chart_step_budget: int = 20000
    per_chart_time_budget: float = 60.0
    total_time_budget: float | None = None
    worker_count: int = 1
    output_format: str = "json"

    def __post_init__(self):
        if self.mode not in ("solve", "verify", "bounds"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.output_format not in ("json", "text"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        if self.degree_override is not None and self.degree_override < 0:
            raise ValueError("the maximum degree must be nonnegative")
        # the remaining invariants are enforced by SolveOptions
        self.solve_options()

    def solve_options(self) -> SolveOptions:
        return SolveOptions(
            max_degree=self.degree_override,
            chart_steps=self.per_chart_step_budget,
            chart_seconds=self.per_chart_time_budget,
            total_seconds=self.total_time_budget,
            workers=self.worker_count,
        )


def solve_command(spec: EquationSpec, cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    report = solve_all(spec.parsed, cfg.solve_options())
    if cfg.output_format == "json":
        print(json.dumps(report_to_dict(report), indent=2), file=out)
    else:
        print(render_text(report), file=out)
    return EXIT_OK if report.fully_resolved else EXIT_UNRESOLVED


def verify_command(spec: EquationSpec, f_text: str, out=None) -> int:
    out = out or sys.stdout
    f = parse_ratfunc(f_text)
    v = verify_solution(spec.parsed, f)
    lhs_name = "f(z+1)" if spec.kind == "difference" else "f'(z)"
    print(f"equation: {format_req(spec.parsed)}", file=out)
    print(f"f = {f}", file=out)
    print(f"{lhs_name} = {v.lhs}", file=out)
    print(f"R(z, f) = {'undefined' if v.undefined else v.rhs}", file=out)
    print("VALID" if v else "INVALID", file=out)
    return EXIT_OK if v else EXIT_INVALID


def bounds_command(spec: EquationSpec, cfg: RunConfig | None = None, out=None) -> int:
    out = out or sys.stdout
    cert = certify(spec.parsed, cfg.degree_override if cfg else None)
    if cfg is not None and cfg.output_format == "json":
        data = {"equation": format_req(spec.parsed), "kind": spec.kind, "bounds": bounds_to_dict(cert)}
        print(json.dumps(data, indent=2), file=out)
    else:
        print(render_bounds(spec.kind, format_req(spec.parsed), cert), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="malmquist",
        description="Rational solutions of f(z+1) = R(z, f) and f' = R(z, f).",
    )
    sub = ap.add_subparsers(dest="mode", required=True)

    def common(p):
        p.add_argument("--kind", choices=KINDS, required=True)
        p.add_argument("--equation", required=True, metavar="EXPR", help="R(z, w); f is a synonym for w")

    p = sub.add_parser("solve", help="enumerate all solutions in Q(z)")
    common(p)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--chart-steps", type=int, default=20000)
    p.add_argument("--chart-seconds", type=float, default=60.0)
    p.add_argument("--total-seconds", type=float, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output", choices=("json", "text"), default="json")

    p = sub.add_parser("verify", help="check one candidate by substitution")
    common(p)
    p.add_argument("--f", required=True, metavar="EXPR", help="rational function of z")

    p = sub.add_parser("bounds", help="print the degree, count and height bounds")
    common(p)
    p.add_argument("--output", choices=("json", "text"), default="text")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = EquationSpec.from_text(args.kind, args.equation)
        if args.mode == "verify":
            return verify_command(spec, args.f)
        if args.mode == "bounds":
            return bounds_command(spec, RunConfig(mode="bounds", output_format=args.output))
        cfg = RunConfig(
            mode="solve",
            degree_override=args.max_degree,
            per_chart_step_budget=args.chart_steps,
            per_chart_time_budget=args.chart_seconds,
            total_time_budget=args.total_seconds,
            worker_count=args.workers,
            output_format=args.output,
        )
        return solve_command(spec, cfg)
    except (MalmquistError, ValueError, ArithmeticError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
