import random

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_upoly
from malmquist.equation import DIFFERENCE, DIFFERENTIAL, req_from_forms
from malmquist.errors import CommonFactor, SingularSystem, ZeroDenominator
from malmquist.forms import BiForm
from malmquist.poly import UPoly
from malmquist.resultant import (
    bareiss_det,
    bezout_cofactors,
    cofactor_det,
    resultant,
    sylvester_matrix,
)

z = UPoly([0, 1])
ONE = UPoly([1])
X = BiForm([1, 0])
Y = BiForm([0, 1])


def power_form(i, n):
    """X^n (i = 1) or Y^n (i = 0) as a degree-n form."""
    return BiForm([1] + [0] * n) if i == 1 else BiForm([0] * n + [1])


def random_form(rng, d, max_degz, lo=-3, hi=3):
    return BiForm([random_upoly(rng, rng.randint(0, max_degz), lo, hi) for _ in range(d + 1)])


# -- Sylvester matrix and resultant ----------------------------------------------------


def test_sylvester_layout():
    M = sylvester_matrix(BiForm([1, 0, z]), BiForm([0, 1, 0]))
    assert M == [
        [ONE, UPoly(), z, UPoly()],
        [UPoly(), ONE, UPoly(), z],
        [UPoly(), ONE, UPoly(), UPoly()],
        [UPoly(), UPoly(), ONE, UPoly()],
    ]


def test_sylvester_linear_forms():
    M = sylvester_matrix(X, Y)
    assert M == [[ONE, UPoly()], [UPoly(), ONE]]
    assert resultant(X, Y) in (ONE, -ONE)


def test_equal_forms_are_singular():
    P = BiForm([1, z, 3])
    assert resultant(P, P).is_zero()


def test_mismatched_degrees_rejected():
    with pytest.raises(ValueError):
        sylvester_matrix(BiForm([1, 0, 1]), X)


@pytest.mark.parametrize(
    "P, Q, expected",
    [
        (BiForm([1, 0, z]), BiForm([0, 1, 0]), z),
        (BiForm([1, 0, -1]), BiForm([1, -1, 0]), UPoly()),
    ],
)
def test_resultant_examples(P, Q, expected):
    assert resultant(P, Q) == expected


def test_resultant_nonzero_constant():
    r = resultant(BiForm([1, 0, -1, 0]), BiForm([0, 0, 0, 1]))
    assert r.deg == 0


def test_resultant_sign_convention_family():
    # Res(X^d + z Y^d, X Y^(d-1)) = (-1)^d z under the fixed basis order; compare up to sign
    for d in range(1, 5):
        P = BiForm([1] + [0] * (d - 1) + [z])
        Q = BiForm([0] * (d - 1) + [1, 0])
        r = resultant(P, Q)
        assert r in (z, -z)


# -- Bezout cofactors ----------------------------------------------------------------------


@pytest.mark.parametrize("i", [0, 1])
def test_bezout_identity_worked_example(i):
    P, Q = BiForm([1, 0, z]), BiForm([0, 1, 0])
    A, B = bezout_cofactors(P, Q, i)
    assert A.d == B.d == 1
    assert A * P + B * Q == power_form(i, 3).scale(z)


def test_bezout_matches_displayed_identity():
    # z Y^3 = Y (X^2 + z Y^2) - X (X Y)
    A, B = bezout_cofactors(BiForm([1, 0, z]), BiForm([0, 1, 0]), 0)
    assert A == Y and B == X.scale(-1)


def test_bezout_degree_zero_cofactors():
    A, B = bezout_cofactors(X, Y, 0)
    r = resultant(X, Y)
    assert A.d == 0 and B.d == 0
    assert A * X + B * Y == Y.scale(r)


def test_bezout_singular():
    with pytest.raises(SingularSystem):
        bezout_cofactors(BiForm([1, 0, -1]), BiForm([1, -1, 0]), 1)


@given(st.integers(0, 10**6), st.integers(1, 4), st.integers(0, 3))
def test_bezout_identity_random(seed, d, degz):
    rng = random.Random(seed)
    P, Q = random_form(rng, d, degz), random_form(rng, d, degz)
    r = resultant(P, Q)
    if r.is_zero():
        return
    for i in (0, 1):
        A, B = bezout_cofactors(P, Q, i)
        assert A * P + B * Q == power_form(i, 2 * d - 1).scale(r)


@given(st.integers(0, 10**6), st.integers(1, 4), st.integers(0, 3))
def test_resultant_degree_bound(seed, d, degz):
    rng = random.Random(seed)
    P, Q = random_form(rng, d, degz), random_form(rng, d, degz)
    assert resultant(P, Q).deg <= 2 * d * degz


# -- common factors against an independent gcd -----------------------------------------------

_X, _Y, _Z = sp.symbols("X Y Z")


def _to_sympy(F: BiForm):
    expr = 0
    for i, a in enumerate(F.coeffs):
        coeff = sum(sp.Rational(c.numerator, c.denominator) * _Z**j for j, c in enumerate(a.coeffs))
        expr += coeff * _X ** (F.d - i) * _Y**i
    return sp.expand(expr)


@given(st.integers(0, 10**6), st.integers(1, 3), st.booleans())
def test_zero_resultant_iff_common_factor(seed, d, plant):
    rng = random.Random(seed)
    if plant and d >= 2:
        g = random_form(rng, 1, 1)
        if g.is_zero():
            return
        P = g * random_form(rng, d - 1, 1)
        Q = g * random_form(rng, d - 1, 1)
    else:
        P, Q = random_form(rng, d, 2, -2, 2), random_form(rng, d, 2, -2, 2)
    if P.is_zero() or Q.is_zero():
        return
    g = sp.gcd(_to_sympy(P), _to_sympy(Q))
    shares = sp.Poly(g, _X, _Y).total_degree() > 0
    assert resultant(P, Q).is_zero() == shares


# -- determinants -------------------------------------------------------------------------------


@given(st.integers(0, 10**6), st.integers(1, 5))
def test_bareiss_matches_cofactor_expansion(seed, n):
    rng = random.Random(seed)
    M = [[random_upoly(rng, rng.randint(-1, 2), -4, 4) for _ in range(n)] for _ in range(n)]
    if rng.random() < 0.3:  # force some singular or zero-pivot cases
        M[rng.randrange(n)] = list(M[0])
        M[0][0] = UPoly()
    assert bareiss_det(M, ONE) == cofactor_det(M, ONE)


def test_bareiss_integers():
    M = [[2, -1, 0], [1, 3, 4], [0, 5, -2]]
    assert bareiss_det(M, 1) == cofactor_det(M, 1) == -54


# -- equations -------------------------------------------------------------------------------------


def test_worked_example_equation():
    R = req_from_forms(DIFFERENCE, BiForm([1, 1, 2 * z**3]), BiForm([0, 1, 0]))
    assert (R.d, R.degz) == (2, 3)
    assert R.resultant().deg == 3


def test_common_factor_rejected():
    with pytest.raises(CommonFactor):
        req_from_forms(DIFFERENCE, BiForm([1, 0, 0]), BiForm([1, 0, 0]))


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDenominator):
        req_from_forms(DIFFERENCE, BiForm([1, 0, 0]), BiForm([0, 0, 0]))


def test_differential_cubic():
    R = req_from_forms(DIFFERENTIAL, BiForm([1, 0, -1, 0]), BiForm([0, 0, 0, 1]))
    assert (R.d, R.degz) == (3, 0)


def test_canonical_scaling():
    a = req_from_forms(DIFFERENCE, BiForm([2, 0, 2 * z]), BiForm([0, 4, 0]))
    b = req_from_forms(DIFFERENCE, BiForm([-1, 0, -z]), BiForm([0, -2, 0]))
    c = req_from_forms(DIFFERENCE, BiForm([z, 0, z**2]), BiForm([0, 2 * z, 0]))
    assert a == b == c
    assert a.P == BiForm([1, 0, z]) and a.Q == BiForm([0, 2, 0])
