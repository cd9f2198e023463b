"""Coefficient systems: for fixed k, the forms Phi_i(c) whose common zeros off
Res(c) = 0 are exactly the degree-k solutions.

A generic degree-k function is ``(c_0 + ... + c_k z^k) / (c_{k+1} + ... + c_{2k+1} z^k)``.
Polynomials are built in the 2k+3 variables ``c_0..c_{2k+1}, z`` and then
split by powers of z.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .equation import DIFFERENCE, DIFFERENTIAL, REq
from .forms import BiForm
from .mpoly import MPoly
from .resultant import bareiss_det, sylvester_rows


@dataclass(frozen=True)
class CoeffSystem:
    k: int
    kind: str
    d: int
    phis: tuple[MPoly, ...]
    res_form: MPoly

    @property
    def nvars(self) -> int:
        return 2 * self.k + 2

    @property
    def form_degree(self) -> int:
        return self.d + 1 if self.kind == DIFFERENCE else self.d + 2

    def var_names(self) -> list[str]:
        return [f"c{i}" for i in range(self.nvars)]

    def nonzero_phis(self) -> list[MPoly]:
        return [p for p in self.phis if p]

    def vanishes_at(self, point) -> bool:
        return all(p.evaluate(point) == 0 for p in self.phis)


def _generic_pair(k: int) -> tuple[list[MPoly], list[MPoly], int]:
    """``f1, f0`` as z-coefficient lists of MPoly in the 2k+3 variables (z last)."""
    n = 2 * k + 3
    f1 = [MPoly.var(i, n) for i in range(k + 1)]
    f0 = [MPoly.var(k + 1 + i, n) for i in range(k + 1)]
    return f1, f0, n


def _z(n: int, power: int, coeff=1) -> MPoly:
    e = [0] * n
    e[-1] = power
    return MPoly(n, {tuple(e): coeff})


def _to_mpoly(zcoeffs: list[MPoly], n: int) -> MPoly:
    total = MPoly.zero(n)
    for j, c in enumerate(zcoeffs):
        if c:
            total = total + c * _z(n, j)
    return total


def _shifted(coeffs: list[MPoly], n: int) -> MPoly:
    """``sum c_i (z+1)^i``."""
    out = [MPoly.zero(n) for _ in coeffs]
    for i, c in enumerate(coeffs):
        for j in range(i + 1):
            out[j] = out[j] + c * comb(i, j)
    return _to_mpoly(out, n)


def _derivative(coeffs: list[MPoly], n: int) -> MPoly:
    return _to_mpoly([c * i for i, c in enumerate(coeffs)][1:], n)


def _compose(F: BiForm, f1: MPoly, f0: MPoly, n: int) -> MPoly:
    d = F.d
    p1 = [MPoly.const(1, n)]
    p0 = [MPoly.const(1, n)]
    for _ in range(d):
        p1.append(p1[-1] * f1)
        p0.append(p0[-1] * f0)
    total = MPoly.zero(n)
    for i, a in enumerate(F.coeffs):
        if a:
            total = total + _to_mpoly([MPoly.const(c, n) for c in a.coeffs], n) * p1[d - i] * p0[i]
    return total


def _split_z(expr: MPoly, nslots: int) -> tuple[MPoly, ...]:
    n = expr.nvars
    parts = expr.collect(n - 1)
    if len(parts) > nslots:
        raise AssertionError("z-degree exceeds the slot count")
    parts += [MPoly.zero(n)] * (nslots - len(parts))
    return tuple(p.drop_variable(n - 1) for p in parts)


def build_difference_system(R: REq, k: int, deadline: float | None = None) -> CoeffSystem:
    """``f1(z+1) Q(f1, f0) - f0(z+1) P(f1, f0) = sum Phi_i z^i``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    c1, c0, n = _generic_pair(k)
    f1, f0 = _to_mpoly(c1, n), _to_mpoly(c0, n)
    expr = _shifted(c1, n) * _compose(R.Q, f1, f0, n) - _shifted(c0, n) * _compose(R.P, f1, f0, n)
    slots = (R.d + 1) * k + R.degz + 1
    return CoeffSystem(k, DIFFERENCE, R.d, _split_z(expr, slots), generic_resultant_form(k, deadline))


def build_differential_system(R: REq, k: int, deadline: float | None = None) -> CoeffSystem:
    """``(f1' f0 - f0' f1) Q(f1, f0) - f0^2 P(f1, f0) = sum Phi_i z^i``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    c1, c0, n = _generic_pair(k)
    f1, f0 = _to_mpoly(c1, n), _to_mpoly(c0, n)
    wronsk = _derivative(c1, n) * f0 - _derivative(c0, n) * f1
    expr = wronsk * _compose(R.Q, f1, f0, n) - f0 * f0 * _compose(R.P, f1, f0, n)
    slots = (R.d + 2) * k + R.degz + 1
    return CoeffSystem(k, DIFFERENTIAL, R.d, _split_z(expr, slots), generic_resultant_form(k, deadline))


def build_system(R: REq, k: int, deadline: float | None = None) -> CoeffSystem:
    if R.kind == DIFFERENCE:
        return build_difference_system(R, k, deadline)
    return build_differential_system(R, k, deadline)


def _generic_resultant(k: int, deadline: float | None) -> MPoly:
    n = 2 * k + 2
    if k == 0:
        return MPoly.const(1, n)
    # slot i of the degree-k form is the coefficient of z^(k-i)
    num = [MPoly.var(k - i, n) for i in range(k + 1)]
    den = [MPoly.var(2 * k + 1 - i, n) for i in range(k + 1)]
    M = sylvester_rows(num, den, MPoly.zero(n))
    return bareiss_det(M, MPoly.const(1, n), deadline)


_resultant_cache: dict[int, MPoly] = {}


def generic_resultant_form(k: int, deadline: float | None = None) -> MPoly:
    """Res of the generic numerator and denominator of degree k; 1 when k = 0."""
    if k not in _resultant_cache:
        _resultant_cache[k] = _generic_resultant(k, deadline)
    return _resultant_cache[k]
