"""Exact univariate polynomials and rational functions over Q.

Coefficients are :class:`fractions.Fraction`, which already keeps numerator and
denominator reduced with a positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import ZeroDenominator

Rat = Fraction


def _as_rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class UPoly:
    """Polynomial in ``z`` with rational coefficients, ``coeffs[i]`` of ``z**i``.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_as_rat(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def const(cls, c) -> "UPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c=1) -> "UPoly":
        return cls([0] * n + [c])

    @property
    def deg(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UPoly({self})"

    def __str__(self):
        return format_poly(self)

    def _coerce(self, other) -> "UPoly":
        if isinstance(other, UPoly):
            return other
        return UPoly.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            other = _as_rat(other)
            return UPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return UPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = UPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, UPoly) else UPoly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.deg
        if len(rem) - 1 < dq:
            return UPoly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        inv = 1 / other.lc
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * inv
            if c:
                quot[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return UPoly(quot), UPoly(rem[:dq])

    def __floordiv__(self, other):
        return self.divmod(self._coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(self._coerce(other))[1]

    def exquo(self, other: "UPoly") -> "UPoly":
        """Exact quotient; raises ``ArithmeticError`` if ``other`` does not divide."""
        q, r = self.divmod(self._coerce(other))
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def monic(self) -> "UPoly":
        if not self.coeffs:
            return self
        return self * (1 / self.lc)

    def content(self) -> Fraction:
        """Positive rational c with ``self / c`` a primitive integer polynomial."""
        return rat_content(self.coeffs)

    def primitive(self) -> tuple[int, ...]:
        """Coprime integer coefficients, sign preserved."""
        return integer_normalize(self.coeffs, positive_lead=False)


def rat_content(values: Iterable[Fraction]) -> Fraction:
    from math import gcd, lcm

    num, den = 0, 1
    for v in values:
        if v:
            num = gcd(num, v.numerator)
            den = lcm(den, v.denominator)
    if num == 0:
        return Fraction(0)
    return Fraction(num, den)


def integer_normalize(values: Sequence[Fraction], positive_lead: bool = True) -> tuple[int, ...]:
    """Scale a rational tuple to coprime integers.

    With ``positive_lead`` the first nonzero entry is made positive.
    """
    c = rat_content(values)
    if c == 0:
        return tuple(0 for _ in values)
    out = [v / c for v in values]
    if positive_lead:
        first = next(v for v in out if v)
        if first < 0:
            out = [-v for v in out]
    return tuple(int(v) for v in out)


def poly_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic gcd; ``gcd(0, 0) == 0``."""
    while b:
        a, b = b, a % b
    return a.monic()


def poly_shift(a: UPoly, h=1) -> UPoly:
    """Return ``a(z + h)``."""
    h = _as_rat(h)
    n = len(a.coeffs)
    out = [Fraction(0)] * n
    for i, c in enumerate(a.coeffs):
        if not c:
            continue
        hp = Fraction(1)
        for j in range(i, -1, -1):
            # coefficient of z**j in c*(z+h)**i
            out[j] += c * comb(i, j) * hp
            hp *= h
    return UPoly(out)


def poly_derivative(a: UPoly) -> UPoly:
    return UPoly(i * c for i, c in enumerate(a.coeffs) if i)


def format_poly(p: UPoly, var: str = "z") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.deg, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class RatFunc:
    """A rational function ``f1/f0`` in lowest terms with monic denominator.

    Build instances through :func:`ratfunc_reduce`; the constructor trusts its
    arguments.
    """

    __slots__ = ("f1", "f0")

    def __init__(self, f1: UPoly, f0: UPoly):
        self.f1 = f1
        self.f0 = f0

    @property
    def deg(self) -> int:
        return max(self.f1.deg, self.f0.deg, 0)

    def is_zero(self) -> bool:
        return self.f1.is_zero()

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.f1 == other.f1 and self.f0 == other.f0

    def __hash__(self):
        return hash((self.f1, self.f0))

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        num = format_poly(self.f1)
        if self.f0 == UPoly.const(1):
            return num
        if len([c for c in self.f1.coeffs if c]) > 1:
            num = f"({num})"
        return f"{num}/({format_poly(self.f0)})"

    def sort_key(self):
        return (self.deg, str(self))

    def coefficient_tuple(self, k: int | None = None) -> tuple[Fraction, ...]:
        """``(c_0..c_k, c_{k+1}..c_{2k+1})``: numerator then denominator, padded to degree ``k``."""
        if k is None:
            k = self.deg
        if k < self.deg:
            raise ValueError(f"layout degree {k} below deg(f) = {self.deg}")
        return tuple(self.f1[i] for i in range(k + 1)) + tuple(self.f0[i] for i in range(k + 1))

    def shift(self) -> "RatFunc":
        return RatFunc(poly_shift(self.f1), poly_shift(self.f0))

    def derivative(self) -> "RatFunc":
        num = poly_derivative(self.f1) * self.f0 - poly_derivative(self.f0) * self.f1
        return ratfunc_reduce(num, self.f0 * self.f0)


def ratfunc_reduce(f1: UPoly, f0: UPoly) -> RatFunc:
    """Cancel the gcd and make the denominator monic."""
    if f0.is_zero():
        raise ZeroDenominator("rational function with zero denominator")
    if f1.is_zero():
        return RatFunc(UPoly(), UPoly.const(1))
    g = poly_gcd(f1, f0)
    if g.deg > 0:
        f1 = f1.exquo(g)
        f0 = f0.exquo(g)
    lc = f0.lc
    return RatFunc(f1 * (1 / lc), f0 * (1 / lc))


def ratfunc_from_tuple(coords: Sequence, k: int) -> RatFunc:
    """Inverse of :meth:`RatFunc.coefficient_tuple` (up to reduction)."""
    if len(coords) != 2 * k + 2:
        raise ValueError("tuple length must be 2k+2")
    return ratfunc_reduce(UPoly(coords[: k + 1]), UPoly(coords[k + 1 :]))
