"""Homogeneous forms in (X, Y) with coefficients in Q[z]."""

from __future__ import annotations

from typing import Sequence

from .poly import RatFunc, UPoly


class BiForm:
    """``sum(coeffs[i] * X**(d-i) * Y**i)`` with ``coeffs[i]`` in Q[z]."""

    __slots__ = ("d", "coeffs")

    def __init__(self, coeffs: Sequence):
        if not coeffs:
            raise ValueError("a form needs at least one coefficient slot")
        self.coeffs = tuple(c if isinstance(c, UPoly) else UPoly.const(c) for c in coeffs)
        self.d = len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    @property
    def degz(self) -> int:
        return max(c.deg for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, BiForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"BiForm({self.format()})"

    def format(self, x: str = "X", y: str = "Y") -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in ((x, self.d - i), (y, i)) if e
            )
            if mono:
                parts.append(f"({c})*{mono}")
            else:
                parts.append(f"({c})")
        return " + ".join(parts) or "0"

    def __add__(self, other: "BiForm") -> "BiForm":
        if other.d != self.d:
            raise ValueError("forms of different degree")
        return BiForm([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        if not isinstance(other, BiForm):
            return BiForm([c * other for c in self.coeffs])
        out = [UPoly()] * (self.d + other.d + 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return BiForm(out)

    __rmul__ = __mul__

    def scale(self, c) -> "BiForm":
        return BiForm([a * c for a in self.coeffs])

    def map_coeffs(self, fn) -> "BiForm":
        return BiForm([fn(c) for c in self.coeffs])

    def dehomogenize(self) -> list[UPoly]:
        """``F(w, 1)`` as its list of Q[z] coefficients, index j for ``w**j``."""
        return [self.coeffs[self.d - j] for j in range(self.d + 1)]


def form_compose(F: BiForm, f) -> UPoly:
    """Evaluate ``F(f1, f0)`` for ``f = f1/f0`` (a RatFunc or a pair of UPoly)."""
    if isinstance(f, RatFunc):
        f1, f0 = f.f1, f.f0
    else:
        f1, f0 = f
    d = F.d
    p1 = [UPoly.const(1)]
    p0 = [UPoly.const(1)]
    for _ in range(d):
        p1.append(p1[-1] * f1)
        p0.append(p0[-1] * f0)
    total = UPoly()
    for i, a in enumerate(F.coeffs):
        if a:
            total = total + a * p1[d - i] * p0[i]
    return total
