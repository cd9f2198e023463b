"""Machine-readable and text renderings of solver results and bound certificates.

The JSON dictionary is the contract; ``REPORT_SCHEMA`` describes it and the
text form is a readable rendering of the same data.
"""

from __future__ import annotations

import json
from importlib import resources

from .bounds import BoundCertificate
from .equation import format_req
from .solver import SolutionReport


def load_schema() -> dict:
    return json.loads(resources.files("malmquist").joinpath("report_schema.json").read_text("utf-8"))


def bounds_to_dict(cert: BoundCertificate) -> dict:
    hb, hi = cert.height_bound, cert.height_bound_instantiated
    return {
        "degree": cert.degree_bound,
        "count": cert.count_bound,
        "height_nats": hb.value if hb else None,
        "height_expression": hb.expression if hb else None,
        "height_coefficient_magnitude": hb.coefficient_magnitude() if hb else None,
        "height_nats_instantiated": hi.value if hi else None,
        "height_expression_instantiated": hi.expression if hi else None,
        "per_degree": {str(k): v for k, v in sorted(cert.per_degree_bounds.items())},
        "hypothesis_violation": cert.hypothesis_violation,
    }


def report_to_dict(report: SolutionReport) -> dict:
    per_degree = []
    for k in sorted(report.per_degree):
        r = report.per_degree[k]
        per_degree.append(
            {
                "k": k,
                "status": r.status,
                "reason": r.reason,
                "charts": [c.as_dict() for c in r.charts],
            }
        )
    return {
        "equation": format_req(report.equation),
        "kind": report.equation.kind,
        "bounds": bounds_to_dict(report.bounds),
        "solutions": [str(f) for f in report.solutions],
        "fully_resolved": report.fully_resolved,
        "count_bound_exceeded": report.count_bound_exceeded,
        "per_degree": per_degree,
        "algebraic_residuals": [r.as_dict() for r in report.algebraic_residuals],
        "timings": {
            "total_seconds": report.seconds,
            "per_degree_seconds": {str(k): r.seconds for k, r in sorted(report.per_degree.items())},
        },
    }


def render_bounds(kind: str, equation: str, cert: BoundCertificate) -> str:
    lines = [f"equation: {equation}", f"kind: {kind}", f"d = {cert.d}, deg_z = {cert.degz}"]
    if not cert.ok:
        lines.append(f"hypothesis violated: {cert.hypothesis_violation}")
    else:
        hb, hi = cert.height_bound, cert.height_bound_instantiated
        lines += [
            f"degree bound: {cert.degree_bound}",
            f"count bound: {cert.count_bound}",
            f"height bound: {hb.expression} = {hb.value:.6f} nats",
            f"coefficient magnitude at most: {hb.coefficient_magnitude():.4e}",
            f"height bound with the actual deg Res: {hi.expression} = {hi.value:.6f} nats",
        ]
    if cert.per_degree_bounds:
        lines.append("per-degree variety degree bounds:")
        for k, v in sorted(cert.per_degree_bounds.items()):
            lines.append(f"  k = {k}: {v}")
    return "\n".join(lines)


def render_text(report: SolutionReport) -> str:
    data = report_to_dict(report)
    out = [render_bounds(data["kind"], data["equation"], report.bounds), ""]
    sols = data["solutions"]
    out.append(f"solutions ({len(sols)}): " + (", ".join(sols) if sols else "none"))
    out.append("fully resolved: " + ("yes" if data["fully_resolved"] else "no"))
    if data["count_bound_exceeded"]:
        out.append("note: more solutions than the count bound (which is one factor short)")
    for entry in data["per_degree"]:
        line = f"  k = {entry['k']}: {entry['status']}"
        if entry["reason"]:
            line += f" ({entry['reason']})"
        out.append(line)
        for c in entry["charts"]:
            if c["status"] not in ("empty", "resolved"):
                out.append(f"    chart c{c['id']} = 1: {c['status']} {c['reason']}".rstrip())
    for r in data["algebraic_residuals"]:
        out.append(f"  residual at k = {r['k']}, chart c{r['chart']}: {r['factor']} in {r['variable']}")
    out.append(f"time: {data['timings']['total_seconds']:.2f} s")
    return "\n".join(out)
