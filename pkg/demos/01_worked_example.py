"""f(z+1) = f(z) + 1 + 2 z^3 / f(z): bounds first, then the low degrees."""

import time

from malmquist import SolveOptions, certify, parse_equation, parse_ratfunc, solve_all, verify_solution
from malmquist.report import render_bounds, render_text

R = parse_equation("difference", "w + 1 + 2*z^3/w")
print("canonical form:", R)

# the bounds need nothing but R: a solution has degree <= 9 and bounded height
cert = certify(R)
print(render_bounds("difference", str(R), cert))
print()

# z^2 is a solution: both sides equal z^2 + 2z + 1
v = verify_solution(R, parse_ratfunc("z^2"))
print("f = z^2:", "VALID" if v else "INVALID", "| f(z+1) =", v.lhs, "| R(z, f) =", v.rhs)
print()

# degrees 0..2 resolve in seconds; degrees 3..9 are listed as skipped
start = time.monotonic()
report = solve_all(R, SolveOptions(max_degree=2))
print(render_text(report))
print(f"\nsolved k <= 2 in {time.monotonic() - start:.1f} s")

# chart by chart: c_j = 1 for each coordinate j of the degree-2 coefficient vector
for chart in report.per_degree[2].charts:
    print(f"  k=2 chart c{chart.chart}=1: {chart.status:10s} {chart.seconds:6.2f} s", [str(f) for f in chart.solutions])
