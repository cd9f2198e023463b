import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import malmquist.solver as solver_mod
from conftest import random_req, upolys
from malmquist.equation import DIFFERENCE, DIFFERENTIAL
from malmquist.errors import HypothesisViolated
from malmquist.groebner import MonOrder, buchberger, is_groebner
from malmquist.heights import height_ratfunc
from malmquist.mpoly import MPoly
from malmquist.parser import parse_equation, parse_ratfunc
from malmquist.poly import UPoly
from malmquist.report import report_to_dict
from malmquist.solver import (
    EMPTY,
    NO_SOLUTIONS,
    RESOLVED,
    SKIPPED,
    UNRESOLVED,
    Budget,
    SolveOptions,
    brute_force_oracle,
    canonical_tuple,
    extract_solutions,
    rational_roots,
    solve_all,
    solve_zero_dim,
    split_rational,
    verify_solution,
)

z = UPoly([0, 1])
WORKED = "w + 1 + 2*z^3/w"
LEX2 = MonOrder.default("lex", 2)
x, y = MPoly.var(0, 2), MPoly.var(1, 2)


def fs(*texts):
    return {parse_ratfunc(t) for t in texts}


# -- rational roots -------------------------------------------------------------------


@pytest.mark.parametrize(
    "p, roots",
    [
        (2 * z**2 - z - 1, {Fraction(1): 1, Fraction(-1, 2): 1}),
        (z**2 + 1, {}),
        (z**3 - z, {Fraction(0): 1, Fraction(1): 1, Fraction(-1): 1}),
        ((z - 2) ** 3 * (3 * z + 1), {Fraction(2): 3, Fraction(-1, 3): 1}),
        (z**2 - 2, {}),
        (UPoly([5]), {}),
    ],
)
def test_rational_roots_examples(p, roots):
    assert rational_roots(p) == roots


def test_rational_roots_rejects_zero():
    with pytest.raises(ValueError):
        rational_roots(UPoly())


@given(
    st.lists(st.builds(Fraction, st.integers(-30, 30), st.integers(1, 12)), max_size=4),
    upolys(3),
)
def test_rational_roots_planted(roots, cofactor):
    if cofactor.is_zero():
        return
    p = cofactor
    for r in roots:
        p = p * UPoly([-r, 1])
    found = rational_roots(p)
    assert set(found) == set(roots) | set(rational_roots(cofactor))
    for r, mult in found.items():
        assert p(r) == 0
        assert mult == roots.count(r) + rational_roots(cofactor).get(r, 0)


def test_split_rational():
    roots, rest = split_rational((z - 1) ** 2 * (z**2 - 2))
    assert roots == {Fraction(1): 2}
    assert rest == z**2 - 2


# -- zero-dimensional solving ----------------------------------------------------------------


def test_solve_zero_dim_examples():
    gb = buchberger([x - y, y**2 - 1], LEX2)
    assert solve_zero_dim(gb) == ([(-1, -1), (1, 1)], [])
    gb = buchberger([y**2 - 2, x - y], LEX2)
    points, residuals = solve_zero_dim(gb, ["x", "y"])
    assert points == []
    assert [(v, f) for v, f, _ in residuals] == [("y", z**2 - 2)]
    gb = buchberger([y * (y - 1), x - y**2], LEX2)
    assert solve_zero_dim(gb)[0] == [(0, 0), (1, 1)]


def test_solve_zero_dim_requires_lex_and_finiteness():
    with pytest.raises(ValueError):
        solve_zero_dim(buchberger([x, y], MonOrder.default("grevlex", 2)))
    with pytest.raises(ValueError):
        solve_zero_dim(buchberger([x * y], LEX2))


# -- verification -----------------------------------------------------------------------------


def test_verify_examples():
    R = parse_equation(DIFFERENCE, WORKED)
    v = verify_solution(R, parse_ratfunc("z^2"))
    assert v and v.lhs == v.rhs == parse_ratfunc("z^2 + 2*z + 1")
    assert not verify_solution(parse_equation(DIFFERENCE, "w^2"), parse_ratfunc("z"))


def test_verify_undefined_composition():
    v = verify_solution(parse_equation(DIFFERENCE, "(w^2 + z)/w"), parse_ratfunc("0"))
    assert not v and v.undefined


def test_verify_differential():
    R = parse_equation(DIFFERENTIAL, "w^3 - w")
    assert all(verify_solution(R, f) for f in fs("0", "1", "-1"))
    assert not verify_solution(R, parse_ratfunc("2"))


# -- oracle --------------------------------------------------------------------------------


def test_oracle_degenerate_cases():
    assert brute_force_oracle(parse_equation(DIFFERENCE, "w^2"), 0, 2) == fs("0", "1")
    assert brute_force_oracle(parse_equation(DIFFERENTIAL, "w^3 - w"), 0, 2) == fs("0", "1", "-1")


def test_oracle_worked_example():
    assert brute_force_oracle(parse_equation(DIFFERENCE, WORKED), 2, 2) == fs("z^2")


def test_canonical_tuple():
    assert canonical_tuple(parse_ratfunc("-z/2")) == (0, 1, -2, 0)
    assert canonical_tuple(parse_ratfunc("(z-1)/(z+1)")) == (1, -1, -1, -1)
    assert canonical_tuple(parse_ratfunc("z^2")) == (0, 0, 1, 1, 0, 0)


# -- extraction ------------------------------------------------------------------------------


def test_extract_degree_zero_cases():
    r = extract_solutions(parse_equation(DIFFERENCE, "w^2"), 0)
    assert r.status == RESOLVED and set(r.solutions) == fs("0", "1")
    r = extract_solutions(parse_equation(DIFFERENTIAL, "w^3 - w"), 0)
    assert r.status == RESOLVED and set(r.solutions) == fs("0", "1", "-1")
    r = extract_solutions(parse_equation(DIFFERENTIAL, "w^3"), 0)
    assert set(r.solutions) == fs("0")


def test_extract_no_solutions():
    r = extract_solutions(parse_equation(DIFFERENCE, "w^2"), 1)
    assert r.status == NO_SOLUTIONS and r.solutions == []
    assert len(r.charts) == 4 and all(c.status in (EMPTY, RESOLVED) for c in r.charts)


def test_extract_constant_solution():
    # a constant c solves it iff c (c^2 + 1) = c^3 + 2, i.e. c = 2
    r = extract_solutions(parse_equation(DIFFERENCE, "(w^3 + 2)/(w^2 + 1)"), 0)
    assert set(r.solutions) == fs("2")


def test_extract_reports_algebraic_residuals():
    # a constant c solves it iff c^2 = 2: no rational point, one residual
    r = extract_solutions(parse_equation(DIFFERENCE, "w^2 + w - 2"), 0)
    assert r.status == NO_SOLUTIONS
    assert [res.factor for res in r.residuals] and all("^2" in res.factor for res in r.residuals)


def test_extract_budget_exhaustion_is_reported():
    R = parse_equation(DIFFERENCE, WORKED)
    r = extract_solutions(R, 2, Budget(chart_steps=1, chart_seconds=5))
    assert r.status == UNRESOLVED
    assert all(c.status in (UNRESOLVED, EMPTY, RESOLVED) for c in r.charts)
    assert any(c.status == UNRESOLVED and c.reason for c in r.charts)


# -- whole runs ----------------------------------------------------------------------------


def test_solve_all_degenerate_difference():
    rep = solve_all(parse_equation(DIFFERENCE, "w^2"))
    assert rep.bounds.degree_bound == 0
    assert set(rep.solutions) == fs("0", "1")
    assert rep.fully_resolved
    # two solutions against a count bound of 1: the bound is one factor short
    assert rep.bounds.count_bound == 1 and rep.count_bound_exceeded


def test_solve_all_degenerate_differential():
    rep = solve_all(parse_equation(DIFFERENTIAL, "w^3 - w"))
    assert set(rep.solutions) == fs("0", "1", "-1") and rep.fully_resolved


def test_solve_all_requires_hypothesis_or_override():
    R = parse_equation(DIFFERENTIAL, "w^2 + z")
    with pytest.raises(HypothesisViolated):
        solve_all(R)
    rep = solve_all(R, SolveOptions(max_degree=0))
    assert 0 in rep.per_degree and rep.bounds.hypothesis_violation


def test_max_degree_marks_rest_skipped():
    rep = solve_all(parse_equation(DIFFERENCE, WORKED), SolveOptions(max_degree=1))
    assert sorted(rep.per_degree) == list(range(10))
    assert all(rep.per_degree[k].status == SKIPPED for k in range(2, 10))
    assert not rep.fully_resolved


def test_total_budget_skips_are_reported():
    rep = solve_all(parse_equation(DIFFERENCE, WORKED), SolveOptions(max_degree=3, total_seconds=0.01))
    statuses = [rep.per_degree[k].status for k in range(4)]
    assert SKIPPED in statuses or UNRESOLVED in statuses
    for k in range(4):
        assert len(rep.per_degree[k].charts) == 2 * k + 2


def test_solutions_respect_height_bounds():
    rep = solve_all(parse_equation(DIFFERENTIAL, "w^3 - w"))
    for f in rep.solutions:
        assert rep.bounds.height_bound.admits(height_ratfunc(f).norm)


def _strip_timings(d):
    d = dict(d)
    d.pop("timings", None)
    return d


def test_determinism_and_workers():
    R = parse_equation(DIFFERENCE, "(w^2 + z)/(w - 1)")
    opts = SolveOptions(max_degree=1)
    a = report_to_dict(solve_all(R, opts))
    b = report_to_dict(solve_all(R, opts))
    c = report_to_dict(solve_all(R, SolveOptions(max_degree=1, workers=2)))
    assert _strip_timings(a) == _strip_timings(b) == _strip_timings(c)


def test_options_validation():
    for bad in (dict(chart_steps=0), dict(chart_seconds=-1), dict(total_seconds=0), dict(workers=0)):
        with pytest.raises(ValueError):
            SolveOptions(**bad)


# -- every basis the solver computes is a Groebner basis ------------------------------------------------


def test_solver_bases_reduce_all_s_pairs(monkeypatch):
    seen = []

    def recording(gens, order, *args, **kwargs):
        gb = buchberger(gens, order, *args, **kwargs)
        seen.append(gb)
        return gb

    monkeypatch.setattr(solver_mod, "buchberger", recording)
    for kind, text in [(DIFFERENCE, "w^2"), (DIFFERENTIAL, "w^3 - w"), (DIFFERENCE, WORKED)]:
        solve_all(parse_equation(kind, text), SolveOptions(max_degree=1))
    assert len(seen) >= 10
    for gb in seen:
        assert is_groebner(gb.polys, gb.order)


# -- oracle equivalence on small random equations --------------------------------------------------------


def test_oracle_equivalence_small_random():
    rng = random.Random(3)
    for _ in range(4):
        kind = rng.choice([DIFFERENCE, DIFFERENTIAL])
        R = random_req(rng, kind, 3 if kind == DIFFERENTIAL else 2, 0)
        rep = solve_all(R, SolveOptions(max_degree=1, chart_seconds=30))
        boxed = {f for f in rep.solutions if f.deg <= 1 and max(map(abs, canonical_tuple(f))) <= 2}
        assert boxed == brute_force_oracle(R, 1, 2)
