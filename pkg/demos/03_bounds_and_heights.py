"""How the count and height bounds are assembled, and how heights behave."""

import math

from malmquist import count_bound, degree_bound, height_bound, height_ratfunc, parse_equation, parse_ratfunc
from malmquist.bounds import per_degree_component_bound, shift_height_check

# count bound: a geometric sum of per-degree bounds (d+1)^((d+1)k + degz) over k <= 3 degz
d, degz = 2, 3
terms = [per_degree_component_bound("difference", d, degz, k) for k in range(3 * degz + 1)]
print("per-degree bounds:", terms[:3], "...")
print("sum:", sum(terms), "closed form:", count_bound("difference", d, degz))
print()

# height bound for the worked example, a priori and with the true deg Res(P, Q) = 3
R = parse_equation("difference", "w + 1 + 2*z^3/w")
print("degree bound:", degree_bound("difference", R.d, R.degz))
for label, hb in (
    ("a priori", height_bound("difference", R)),
    ("instantiated", height_bound("difference", R, res_degree=R.resultant().deg)),
):
    print(f"{label:13s} h(f) <= {hb.value:.4f} nats, coefficients <= {hb.coefficient_magnitude():.3e}")
    print(" " * 14, hb.expression)
print()

# heights of a few rational functions: log of the largest coprime integer coefficient
for text in ("z^2", "(3*z+1)/2", "(z+1)^2", "(z+1)^6"):
    f = parse_ratfunc(text)
    h = height_ratfunc(f)
    print(f"h({text}) = log {h.norm} = {h.value:.4f}")

# shifting z -> z+1 raises the height by at most deg(f) log 2 + log(deg(f) + 1)
f = parse_ratfunc("z^6")
g = f.shift()
print(f"\nh(z^6) = {height_ratfunc(f).value:.3f}, h((z+1)^6) = {height_ratfunc(g).value:.3f},",
      f"allowed <= {6 * math.log(2) + math.log(7):.3f}, check: {shift_height_check(f)}")
