"""Effective bounds: solution degree, solution count, per-degree variety degree, height.

Every height bound here has the shape ``h(f) <= log(N) / q`` with ``N`` a
positive integer, so membership of a concrete solution is decided exactly by
``norm(f) ** q <= N``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .equation import DIFFERENCE, DIFFERENTIAL, REq
from .errors import HypothesisViolated
from .forms import form_compose
from .heights import height_projective, height_ratfunc, height_req
from .poly import RatFunc, poly_gcd

MIN_D = {DIFFERENCE: 2, DIFFERENTIAL: 3}


def _check(kind: str, d: int) -> None:
    if kind not in MIN_D:
        raise ValueError(f"unknown equation kind {kind!r}")
    if d < MIN_D[kind]:
        raise HypothesisViolated(
            f"{kind} equations need deg_w(R) >= {MIN_D[kind]} for a finiteness bound, got d = {d}"
        )


def degree_bound(kind: str, d: int, degz: int) -> int:
    """Largest possible deg(f) of a solution: floor((2d-1) degz / (d-1)) resp. (d-2)."""
    _check(kind, d)
    denom = d - 1 if kind == DIFFERENCE else d - 2
    return (2 * d - 1) * degz // denom


def simplified_degree_bound(kind: str, degz: int) -> int:
    return 3 * degz if kind == DIFFERENCE else 5 * degz


def per_degree_component_bound(kind: str, d: int, degz: int, k: int) -> int:
    if k < 0:
        raise ValueError("k must be nonnegative")
    b = d + 1 if kind == DIFFERENCE else d + 2
    return b ** (b * k + degz)


def count_bound(kind: str, d: int, degz: int) -> int:
    """Closed-form geometric sum of the per-degree bounds over k <= 3 degz (resp. 5 degz).

    For difference equations this is ``(d+1)**degz * ((d+1)**((d+1)(3 degz+1)) - 1)
    / ((d+1)**(d+1) - 1)``.
    """
    _check(kind, d)
    b = d + 1 if kind == DIFFERENCE else d + 2
    top = simplified_degree_bound(kind, degz)
    num = b**degz * (b ** (b * (top + 1)) - 1)
    den = b**b - 1
    q, r = divmod(num, den)
    assert r == 0
    return q


def form_count_bound(kind: str, d: int, degz: int) -> int:
    """Count bound with one factor per Phi form: the degree-k system has
    ``b k + degz + 1`` forms of degree ``b``, so Bezout gives ``b ** (b k + degz + 1)``
    per degree and ``b * count_bound`` in total.  ``count_bound`` is one factor
    short; ``R = w^2`` (solutions 0 and 1, count bound 1) shows the gap is real.
    """
    b = d + 1 if kind == DIFFERENCE else d + 2
    return b * count_bound(kind, d, degz)


@dataclass(frozen=True)
class HeightBound:
    """``h(f) <= log(log_argument) / divisor`` for every solution f in Q(z)."""

    divisor: int
    log_argument: int
    expression: str
    terms: dict = field(default_factory=dict)

    @property
    def value(self) -> float:
        x = math.log(self.log_argument) / self.divisor
        # round outward so the float never understates the exact bound
        for _ in range(4):
            x = math.nextafter(x, math.inf)
        return x

    def admits(self, norm: int) -> bool:
        """Exact test of ``log(norm) <= bound``."""
        return norm**self.divisor <= self.log_argument

    def coefficient_magnitude(self) -> float:
        """Upper bound on the coprime integer coefficients, ``exp(bound)``."""
        return math.exp(self.value)


def height_bound(
    kind: str, R: REq, res_degree: int | None = None, deg_f: int | None = None
) -> HeightBound:
    """Height bound on solutions over Q.

    ``res_degree`` defaults to the worst case ``2 d degz``; pass the true
    ``deg Res(P, Q)`` for the instantiated bound.  ``deg_f`` defaults to the
    degree bound.
    """
    d, degz = R.d, R.degz
    K = degree_bound(kind, d, degz) if deg_f is None else deg_f
    if res_degree is None:
        res_degree = 2 * d * degz
    mr = height_req(R).norm
    fact = math.factorial(2 * d - 1)
    if kind == DIFFERENCE:
        q = d - 1
        e2 = res_degree + 4 * d * degz + (6 * d - 2) * K + 1
        n = mr ** (2 * d - 1) * 2**e2 * fact * (K + 1)
        extra = f" + log({K + 1})"
    else:
        q = d - 2
        e2 = res_degree + 4 * d * degz + (6 * d + 1) * K + 1
        n = mr ** (2 * d - 1) * 2**e2 * fact
        extra = ""
    expr = f"(1/{q})*({2 * d - 1}*log({mr}) + {e2}*log(2) + log({2 * d - 1}!){extra})"
    terms = {
        "height_R_norm": mr,
        "height_R_multiplier": 2 * d - 1,
        "log2_multiplier": e2,
        "factorial_of": 2 * d - 1,
        "extra_log_of": K + 1 if kind == DIFFERENCE else 1,
        "res_degree": res_degree,
        "deg_f": K,
    }
    return HeightBound(q, n, expr, terms)


@dataclass
class BoundCertificate:
    kind: str
    d: int
    degz: int
    degree_bound: int | None
    count_bound: int | None
    height_bound: HeightBound | None
    height_bound_instantiated: HeightBound | None
    per_degree_bounds: dict[int, int]
    hypothesis_violation: str | None = None

    @property
    def ok(self) -> bool:
        return self.hypothesis_violation is None


def certify(R: REq, max_degree: int | None = None) -> BoundCertificate:
    """All bounds for R; hypothesis failures are recorded rather than raised."""
    kind, d, degz = R.kind, R.d, R.degz
    try:
        K = degree_bound(kind, d, degz)
    except HypothesisViolated as exc:
        top = max_degree if max_degree is not None else -1
        return BoundCertificate(
            kind, d, degz, None, None, None, None,
            {k: per_degree_component_bound(kind, d, degz, k) for k in range(top + 1)},
            str(exc),
        )
    top = K if max_degree is None else max_degree
    return BoundCertificate(
        kind=kind,
        d=d,
        degz=degz,
        degree_bound=K,
        count_bound=count_bound(kind, d, degz),
        height_bound=height_bound(kind, R),
        height_bound_instantiated=height_bound(kind, R, res_degree=max(R.resultant().deg, 0)),
        per_degree_bounds={k: per_degree_component_bound(kind, d, degz, k) for k in range(top + 1)},
    )


def _composition_pair(R: REq, f: RatFunc):
    """``R(z, f)`` as a coprime pair ``(g1, g0)``; ``g0 = 0`` encodes the value infinity."""
    a = form_compose(R.P, f)
    b = form_compose(R.Q, f)
    g = poly_gcd(a, b)
    return a.exquo(g), b.exquo(g)


def composition_degree(R: REq, f: RatFunc) -> int:
    g1, g0 = _composition_pair(R, f)
    return max(g1.deg, g0.deg, 0)


def degree_lemma_check(R: REq, f: RatFunc) -> bool:
    """``d deg(f) <= deg(R(z, f(z))) + (2d-1) deg_z(R)``."""
    d = R.d
    if d < 2:
        raise HypothesisViolated("the degree inequality needs d >= 2")
    return d * f.deg <= composition_degree(R, f) + (2 * d - 1) * R.degz


def composition_height_norm(R: REq, f: RatFunc) -> int:
    g1, g0 = _composition_pair(R, f)
    return height_projective(list(g1.coeffs) + list(g0.coeffs)).norm


def height_lemma_check(R: REq, f: RatFunc) -> bool:
    """Exact check of ``d h(f) <= h(R(f)) + (2d-1) h(R) + E log 2 + log (2d-1)!``.

    ``E = deg Res(P, Q) + 4 d degz + (6d-3) deg(f) + 1``.
    """
    d = R.d
    e2 = max(R.resultant().deg, 0) + 4 * d * R.degz + (6 * d - 3) * f.deg + 1
    lhs = height_ratfunc(f).norm ** d
    rhs = composition_height_norm(R, f) * height_req(R).norm ** (2 * d - 1) * 2**e2
    return lhs <= rhs * math.factorial(2 * d - 1)


def shift_height_check(f: RatFunc) -> bool:
    """``h(f(z+1)) <= h(f) + deg(f) log 2 + log(deg(f) + 1)``, exactly."""
    k = f.deg
    return height_ratfunc(f.shift()).norm <= height_ratfunc(f).norm * 2**k * (k + 1)


def derivative_height_check(f: RatFunc) -> bool:
    """``h(f') <= 2 h(f) + 4 deg(f) log 2``, exactly."""
    k = f.deg
    return height_ratfunc(f.derivative()).norm <= height_ratfunc(f).norm ** 2 * 2 ** (4 * k)
