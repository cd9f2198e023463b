"""Equations whose solutions are all constants, checked against brute force."""

from malmquist import brute_force_oracle, parse_equation, solve_all
from malmquist.system import build_system

# f(z+1) = f(z)^2: degz = 0 forces constants, and c = c^2 leaves 0 and 1
R = parse_equation("difference", "w^2")
report = solve_all(R)
print("f(z+1) = f^2      ->", [str(f) for f in report.solutions], "fully resolved:", report.fully_resolved)
print("  brute force     ->", sorted(str(f) for f in brute_force_oracle(R, 0, 3)))

# the degree-0 system is a single cubic form in (c0 : c1)
system = build_system(R, 0)
print("  Phi_0 =", system.phis[0].format(system.var_names()))

# two solutions against a count bound of 1: the bound misses one factor per degree
print("  count bound", report.bounds.count_bound, "exceeded:", report.count_bound_exceeded)
print()

# f' = f^3 - f: constants with c^3 = c
R = parse_equation("differential", "w^3 - w")
report = solve_all(R)
print("f' = f^3 - f      ->", [str(f) for f in report.solutions], "fully resolved:", report.fully_resolved)
print("  brute force     ->", sorted(str(f) for f in brute_force_oracle(R, 0, 3)))
print()

# f(z+1) = f^2 + f - 2: constants need c^2 = 2, so nothing is rational and the
# irrational points come back as a residual factor
R = parse_equation("difference", "w^2 + w - 2")
report = solve_all(R)
print("f(z+1) = f^2+f-2  ->", [str(f) for f in report.solutions])
for r in report.algebraic_residuals:
    print(f"  residual at k={r.k}, chart c{r.chart}=1, variable {r.variable}: {r.factor}")
