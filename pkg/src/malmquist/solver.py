"""Enumerate all solutions in Q(z) degree by degree.

For each k the coefficient system is solved chart by chart (``c_j = 1``) after
adjoining ``t * Res(c) - 1``, which removes the positive-dimensional families
of non-reduced representations ``(g h1, g h0)``.  A grevlex basis decides
emptiness and zero-dimensionality; a lex basis computed from scratch gives a
triangular system whose rational points are read off by rational-root
extraction.  Irrational points are reported as residual factors.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

from .bounds import BoundCertificate, certify, form_count_bound
from .equation import DIFFERENCE, REq
from .errors import BudgetExhausted, HypothesisViolated, UndefinedComposition
from .groebner import NO, TRIVIAL, YES, GroebnerBasis, MonOrder, buchberger
from .heights import height_ratfunc
from .mpoly import MPoly
from .poly import RatFunc, UPoly, format_poly, integer_normalize, poly_derivative, poly_gcd, ratfunc_reduce
from .system import build_system

RESOLVED = "resolved"
NO_SOLUTIONS = "no-solutions"
UNRESOLVED = "unresolved"
SKIPPED = "skipped"
EMPTY = "empty"


# -- univariate root extraction ---------------------------------------------


def _sturm(p: UPoly) -> list[UPoly]:
    seq = [p, poly_derivative(p)]
    while seq[-1].deg > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    return seq


def _sign_changes(seq: list[UPoly], x: Fraction) -> int:
    signs = [s for s in (q(x) for q in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def rational_roots(p: UPoly) -> dict[Fraction, int]:
    """Rational roots of ``p`` mapped to their multiplicities, in increasing order.

    A rational root of a primitive integer polynomial with leading coefficient
    ``a`` has the form ``m / a``; real roots are isolated by Sturm bisection
    until each interval holds at most one such candidate, which is then tested
    exactly.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has every number as a root")
    if p.deg < 1:
        return {}
    sq = p.exquo(poly_gcd(p, poly_derivative(p)))
    ints = sq.primitive()
    a = abs(ints[-1])
    sq = UPoly(ints)
    bound = 1 + max(Fraction(abs(c), a) for c in ints[:-1]) if len(ints) > 1 else Fraction(1)
    seq = _sturm(sq)
    found: list[Fraction] = []

    def search(lo: Fraction, hi: Fraction, vlo: int, vhi: int) -> None:
        n = vlo - vhi  # distinct real roots in (lo, hi]
        if n == 0:
            return
        if (hi - lo) * a < 1:
            m = floor(hi * a)
            x = Fraction(m, a)
            if x > lo and sq(x) == 0:
                found.append(x)
            return
        mid = (lo + hi) / 2
        vmid = _sign_changes(seq, mid)
        search(lo, mid, vlo, vmid)
        search(mid, hi, vmid, vhi)

    lo, hi = -bound - 1, bound
    search(lo, hi, _sign_changes(seq, lo), _sign_changes(seq, hi))
    out = {}
    for r in sorted(found):
        lin = UPoly([-r, 1])
        q, mult = p, 0
        while True:
            quo, rem = q.divmod(lin)
            if rem:
                break
            q, mult = quo, mult + 1
        out[r] = mult
    return out


def split_rational(p: UPoly) -> tuple[dict[Fraction, int], UPoly]:
    """Rational roots of ``p`` and the monic squarefree cofactor without them."""
    roots = rational_roots(p)
    sq = p.exquo(poly_gcd(p, poly_derivative(p))).monic()
    for r in roots:
        sq = sq.exquo(UPoly([-r, 1]))
    return roots, sq


# -- zero-dimensional solving -------------------------------------------------


@dataclass(frozen=True)
class Residual:
    """A non-rational factor met while back-substituting a triangular system."""

    k: int
    chart: int
    variable: str
    factor: str
    partial_point: tuple[tuple[str, str], ...] = ()

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "chart": self.chart,
            "variable": self.variable,
            "factor": self.factor,
            "partial_point": dict(self.partial_point),
        }


def _as_univariate(p: MPoly, var: int) -> UPoly:
    return UPoly([c.terms.get((0,) * p.nvars, 0) for c in p.collect(var)])


def solve_zero_dim(
    gb: GroebnerBasis, names: list[str] | None = None
) -> tuple[list[tuple[Fraction, ...]], list[tuple[str, UPoly, dict]]]:
    """Rational points of a zero-dimensional ideal from its reduced lex basis.

    Returns the points (in variable index order) and residuals as
    ``(variable name, factor, partial point)``.
    """
    if gb.order.kind != "lex":
        raise ValueError("triangular extraction needs a lex basis")
    if gb.zero_dimensional != YES:
        raise ValueError(f"ideal is not zero-dimensional ({gb.zero_dimensional})")
    n = gb.nvars
    names = names or [f"x{i}" for i in range(n)]
    levels = list(reversed(gb.order.perm))  # least variable first
    partial: list[dict[int, Fraction]] = [{}]
    residuals: list[tuple[str, UPoly, dict]] = []
    for depth, v in enumerate(levels):
        allowed = set(levels[: depth + 1])
        chain = [g for g in gb.polys if g.variables() <= allowed and v in g.variables()]
        extended = []
        for point in partial:
            g = UPoly()
            for poly in chain:
                g = poly_gcd(g, _as_univariate(poly.specialize(point), v))
            if g.is_zero():
                raise ArithmeticError("fibre is not finite; basis is not zero-dimensional")
            if g.deg == 0:
                continue
            roots, rest = split_rational(g)
            for r in roots:
                q = dict(point)
                q[v] = r
                extended.append(q)
            if rest.deg > 0:
                residuals.append((names[v], rest, {names[i]: x for i, x in point.items()}))
        partial = extended
    points = [tuple(p[i] for i in range(n)) for p in partial]
    return sorted(points), residuals


# -- verification -------------------------------------------------------------


@dataclass(frozen=True)
class Verification:
    valid: bool
    undefined: bool = False
    lhs: RatFunc | None = None
    rhs: RatFunc | None = None

    def __bool__(self):
        return self.valid


def verify_solution(R: REq, f: RatFunc) -> Verification:
    """Exact substitution check of ``f(z+1) = R(z, f)`` or ``f' = R(z, f)``."""
    lhs = f.shift() if R.kind == DIFFERENCE else f.derivative()
    try:
        rhs = R.rhs(f)
    except UndefinedComposition:
        return Verification(False, True, lhs, None)
    return Verification(lhs == rhs, False, lhs, rhs)


def canonical_tuple(f: RatFunc) -> tuple[int, ...]:
    """Coprime integer coefficients in degree-deg(f) layout, first nonzero positive."""
    return integer_normalize(f.coefficient_tuple())


def brute_force_oracle(R: REq, kmax: int, box: int) -> set[RatFunc]:
    """Every solution of degree <= kmax whose canonical integer tuple lies in ``[-box, box]``."""
    from math import gcd

    found = set()
    for k in range(kmax + 1):
        for t in itertools.product(range(-box, box + 1), repeat=2 * k + 2):
            if not any(t[k + 1 :]):
                continue
            first = next(x for x in t if x)
            if first < 0:
                continue
            g = 0
            for x in t:
                g = gcd(g, x)
            if g != 1:
                continue
            f1 = UPoly(t[: k + 1])
            f0 = UPoly(t[k + 1 :])
            if max(f1.deg, f0.deg) != k or poly_gcd(f1, f0).deg > 0:
                continue
            f = ratfunc_reduce(f1, f0)
            if verify_solution(R, f):
                found.add(f)
    return found


# -- per-degree extraction -------------------------------------------------------


@dataclass
class Budget:
    chart_steps: int = 20000
    chart_seconds: float = 60.0
    deadline: float | None = None  # time.monotonic() cut-off shared by all work

    def chart_deadline(self) -> float:
        end = time.monotonic() + self.chart_seconds
        return end if self.deadline is None else min(end, self.deadline)

    def expired(self) -> bool:
        return self.deadline is not None and time.monotonic() > self.deadline


@dataclass
class ChartResult:
    chart: int
    status: str
    reason: str = ""
    points: int = 0
    residuals: list[Residual] = field(default_factory=list)
    solutions: list[RatFunc] = field(default_factory=list)
    seconds: float = 0.0

    def as_dict(self) -> dict:
        return {
            "id": self.chart,
            "status": self.status,
            "reason": self.reason,
            "residuals": [r.as_dict() for r in self.residuals],
        }


@dataclass
class DegreeResult:
    k: int
    status: str
    charts: list[ChartResult] = field(default_factory=list)
    solutions: list[RatFunc] = field(default_factory=list)
    reason: str = ""
    seconds: float = 0.0

    @property
    def residuals(self) -> list[Residual]:
        return [r for c in self.charts for r in c.residuals]


def _saturating_form(system) -> MPoly:
    # k = 0: Res(c) is the constant 1 and the chart logic must keep c_1 != 0
    return system.res_form if system.k > 0 else MPoly.var(1, system.nvars)


def _dehomogenized_chart_basis(system, j: int, budget: Budget, deadline: float) -> list[MPoly]:
    """Grevlex basis of the chart ideal ``(Phi) + (c_j - 1)`` in the other variables.

    A homogeneous grevlex basis with ``c_j`` least dehomogenizes to a basis of
    the affine chart; the homogeneous run keeps coefficient growth in check.
    """
    n = system.nvars
    perm = tuple([i for i in range(n - 1, -1, -1) if i != j] + [j])
    hom = buchberger(system.nonzero_phis(), MonOrder("grevlex", perm), budget.chart_steps, deadline)
    out = []
    for g in hom.polys:
        h = g.specialize({j: 1}).drop_variable(j)
        if h:
            out.append(h)
    return out


def solve_chart(R: REq, k: int, j: int, budget: Budget, system=None) -> ChartResult:
    start = time.monotonic()
    result = ChartResult(j, UNRESOLVED)
    try:
        if system is None:
            system = build_system(R, k, budget.deadline)
        deadline = budget.chart_deadline()
        n = system.nvars
        keep = [i for i in range(n) if i != j]
        names = [f"c{i}" for i in keep]
        base = _dehomogenized_chart_basis(system, j, budget, deadline)
        if any(g.total_degree() == 0 for g in base):
            result.status = EMPTY
            return result
        sat = _saturating_form(system).specialize({j: 1}).drop_variable(j)
        if sat.is_zero():
            result.status = EMPTY
            return result
        local_n = len(keep)
        gens = base
        if sat.total_degree() > 0:
            local_n += 1
            positions = list(range(len(keep)))
            t = MPoly.var(local_n - 1, local_n)
            gens = [g.embed(local_n, positions) for g in base]
            gens.append(t * sat.embed(local_n, positions) - 1)
            names.append("t")
        # t (if present) greatest, then c_{2k+1} > ... > c_0
        perm = tuple(range(local_n - 1, -1, -1))
        gb = buchberger(gens, MonOrder("grevlex", perm), budget.chart_steps, deadline)
        if gb.zero_dimensional == TRIVIAL:
            result.status = EMPTY
            return result
        if gb.zero_dimensional == NO:
            result.reason = "positive-dimensional after saturation (structural anomaly)"
            return result
        # lex from scratch, seeded with the grevlex basis of the same ideal
        lex = buchberger(gb.polys, MonOrder("lex", perm), budget.chart_steps, deadline)
        points, residuals = solve_zero_dim(lex, names)
        result.points = len(points)
        result.residuals = [
            Residual(k, j, var, format_poly(fac, var), tuple((a, str(b)) for a, b in pt.items()))
            for var, fac, pt in residuals
        ]
        sols = set()
        for pt in points:
            coords = [Fraction(0)] * system.nvars
            coords[j] = Fraction(1)
            for local, i in enumerate(keep):
                coords[i] = pt[local]
            f = ratfunc_reduce(UPoly(coords[: k + 1]), UPoly(coords[k + 1 :]))
            if f.deg != k:
                continue
            if not verify_solution(R, f):
                raise AssertionError(f"extracted point {coords} does not verify")
            sols.add(f)
        result.solutions = sorted(sols, key=RatFunc.sort_key)
        result.status = RESOLVED
    except BudgetExhausted as exc:
        result.status = UNRESOLVED
        result.reason = exc.reason
    finally:
        result.seconds = time.monotonic() - start
    return result


def _summarize(k: int, charts: list[ChartResult]) -> DegreeResult:
    sols = sorted({f for c in charts for f in c.solutions}, key=RatFunc.sort_key)
    if any(c.status in (UNRESOLVED, SKIPPED) for c in charts):
        status = UNRESOLVED
        reason = "; ".join(sorted({c.reason for c in charts if c.reason}))
    else:
        status = RESOLVED if sols else NO_SOLUTIONS
        reason = ""
    return DegreeResult(k, status, charts, sols, reason, sum(c.seconds for c in charts))


def extract_solutions(R: REq, k: int, budget: Budget | None = None) -> DegreeResult:
    """Solutions of exact degree k, with per-chart status."""
    budget = budget or Budget()
    start = time.monotonic()
    try:
        system = build_system(R, k, budget.deadline)
    except BudgetExhausted as exc:
        charts = [ChartResult(j, UNRESOLVED, f"system construction: {exc.reason}") for j in range(2 * k + 1, -1, -1)]
        return DegreeResult(k, UNRESOLVED, charts, [], charts[0].reason, time.monotonic() - start)
    charts = []
    for j in range(2 * k + 1, -1, -1):
        if budget.expired():
            charts.append(ChartResult(j, SKIPPED, "global time budget exhausted"))
            continue
        charts.append(solve_chart(R, k, j, budget, system))
    return _summarize(k, charts)


# -- whole equation ---------------------------------------------------------------


@dataclass
class SolveOptions:
    max_degree: int | None = None
    chart_steps: int = 20000
    chart_seconds: float = 60.0
    total_seconds: float | None = None
    workers: int = 1

    def __post_init__(self):
        if self.chart_steps <= 0 or self.chart_seconds <= 0:
            raise ValueError("budgets must be positive")
        if self.total_seconds is not None and self.total_seconds <= 0:
            raise ValueError("budgets must be positive")
        if self.workers < 1:
            raise ValueError("worker count must be at least 1")


@dataclass
class SolutionReport:
    equation: REq
    bounds: BoundCertificate
    solutions: list[RatFunc]
    per_degree: dict[int, DegreeResult]
    seconds: float = 0.0
    # more solutions than count_bound; possible since that bound is one factor short
    count_bound_exceeded: bool = False

    @property
    def fully_resolved(self) -> bool:
        return bool(self.per_degree) and all(
            r.status in (RESOLVED, NO_SOLUTIONS) for r in self.per_degree.values()
        )

    @property
    def algebraic_residuals(self) -> list[Residual]:
        return [r for k in sorted(self.per_degree) for r in self.per_degree[k].residuals]


def _chart_task(args):
    R, k, j, steps, seconds, deadline = args
    budget = Budget(steps, seconds, deadline)
    if budget.expired():
        return k, ChartResult(j, SKIPPED, "global time budget exhausted")
    return k, solve_chart(R, k, j, budget)


def solve_all(R: REq, options: SolveOptions | None = None) -> SolutionReport:
    """Run every degree up to the degree bound (or ``options.max_degree``)."""
    options = options or SolveOptions()
    start = time.monotonic()
    cert = certify(R, options.max_degree)
    if not cert.ok and options.max_degree is None:
        raise HypothesisViolated(cert.hypothesis_violation)
    top = options.max_degree if options.max_degree is not None else cert.degree_bound
    deadline = None if options.total_seconds is None else start + options.total_seconds
    budget = Budget(options.chart_steps, options.chart_seconds, deadline)

    per_degree: dict[int, DegreeResult] = {}
    if options.workers > 1:
        tasks = [
            (R, k, j, budget.chart_steps, budget.chart_seconds, deadline)
            for k in range(top + 1)
            for j in range(2 * k + 1, -1, -1)
        ]
        by_k: dict[int, list[ChartResult]] = {k: [] for k in range(top + 1)}
        with ProcessPoolExecutor(max_workers=options.workers) as pool:
            for k, chart in pool.map(_chart_task, tasks):
                by_k[k].append(chart)
        for k, charts in by_k.items():
            per_degree[k] = _summarize(k, sorted(charts, key=lambda c: -c.chart))
    else:
        for k in range(top + 1):
            if budget.expired():
                charts = [ChartResult(j, SKIPPED, "global time budget exhausted") for j in range(2 * k + 1, -1, -1)]
                per_degree[k] = DegreeResult(k, SKIPPED, charts, [], "global time budget exhausted")
                continue
            per_degree[k] = extract_solutions(R, k, budget)
    if cert.ok and top < cert.degree_bound:
        for k in range(top + 1, cert.degree_bound + 1):
            per_degree[k] = DegreeResult(k, SKIPPED, [], [], "above the requested maximum degree")

    solutions = sorted({f for r in per_degree.values() for f in r.solutions}, key=RatFunc.sort_key)
    report = SolutionReport(R, cert, solutions, per_degree, time.monotonic() - start)
    _check_report(report)
    return report


def _check_report(report: SolutionReport) -> None:
    """Re-verify every solution and enforce the count and height bounds."""
    R, cert = report.equation, report.bounds
    for f in report.solutions:
        if not verify_solution(R, f):
            raise AssertionError(f"reported solution {f} does not verify")
    if not cert.ok:
        return
    report.count_bound_exceeded = len(report.solutions) > cert.count_bound
    if len(report.solutions) > form_count_bound(R.kind, cert.d, cert.degz):
        raise AssertionError("solution count exceeds the Bezout count bound")
    for f in report.solutions:
        norm = height_ratfunc(f).norm
        for hb in (cert.height_bound, cert.height_bound_instantiated):
            if not hb.admits(norm):
                raise AssertionError(f"solution {f} exceeds the height bound {hb.expression}")
