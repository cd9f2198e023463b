"""The equation object: kind plus R(z, w) as a coprime pair of forms P, Q."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import CommonFactor, UndefinedComposition, ZeroDenominator
from .forms import BiForm, form_compose
from .poly import RatFunc, UPoly, format_poly, poly_gcd, ratfunc_reduce
from .resultant import resultant

DIFFERENCE = "difference"
DIFFERENTIAL = "differential"
KINDS = (DIFFERENCE, DIFFERENTIAL)


@dataclass(frozen=True)
class REq:
    """``f(z+1) = R(z, f)`` or ``f'(z) = R(z, f)`` with ``R(z, X/Y) = P(X, Y)/Q(X, Y)``.

    Use :func:`req_from_forms` to build a canonical instance.
    """

    kind: str
    P: BiForm
    Q: BiForm

    @property
    def d(self) -> int:
        return self.P.d

    @property
    def degz(self) -> int:
        return max(self.P.degz, self.Q.degz, 0)

    def coefficient_multiset(self) -> list[Fraction]:
        """Every Q-coefficient of every z-polynomial in P and Q."""
        return [c for F in (self.P, self.Q) for a in F.coeffs for c in a.coeffs]

    def resultant(self) -> UPoly:
        return resultant(self.P, self.Q)

    def rhs(self, f: RatFunc) -> RatFunc:
        """``R(z, f(z))`` in lowest terms."""
        den = form_compose(self.Q, f)
        if den.is_zero():
            raise UndefinedComposition(f"Q(f1, f0) vanishes identically for f = {f}")
        return ratfunc_reduce(form_compose(self.P, f), den)

    def text(self) -> str:
        return format_req(self)

    def __str__(self):
        return f"{self.kind}: {self.text()}"


def _normalize_pair(P: BiForm, Q: BiForm) -> tuple[BiForm, BiForm]:
    polys = [a for F in (P, Q) for a in F.coeffs]
    g = UPoly()
    for a in polys:
        g = poly_gcd(g, a)
    if g.deg > 0:
        P = P.map_coeffs(lambda a: a.exquo(g) if a else a)
        Q = Q.map_coeffs(lambda a: a.exquo(g) if a else a)
    coeffs = [c for F in (P, Q) for a in F.coeffs for c in a.coeffs if c]
    num = 0
    den = 1
    for c in coeffs:
        num = gcd(num, c.numerator)
        den = lcm(den, c.denominator)
    scale = Fraction(den, num)
    lead = next(a.lc for F in (P, Q) for a in F.coeffs if a)
    if lead < 0:
        scale = -scale
    return P.scale(scale), Q.scale(scale)


def req_from_forms(kind: str, P: BiForm, Q: BiForm) -> REq:
    """Canonical REq: coprimality certified by a nonzero resultant.

    The pair is divided by the gcd of all its z-coefficients, scaled to coprime
    integers, and signed so that the top z-coefficient of the first nonzero
    slot (P before Q) is positive.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown equation kind {kind!r}")
    if Q.is_zero():
        raise ZeroDenominator("Q is identically zero")
    if P.d != Q.d:
        raise ValueError(f"forms of different degree: {P.d} vs {Q.d}")
    if P.d < 1:
        raise ValueError("R must depend on w (deg_w(R) >= 1)")
    if resultant(P, Q).is_zero():
        raise CommonFactor("Res(P, Q) = 0: P and Q share a common factor")
    P, Q = _normalize_pair(P, Q)
    return REq(kind, P, Q)


def _wpoly_text(coeffs: list[UPoly]) -> str:
    """Render ``sum(coeffs[j] * w**j)`` with z-polynomial coefficients."""
    parts = []
    for j in range(len(coeffs) - 1, -1, -1):
        a = coeffs[j]
        if a.is_zero():
            continue
        mono = "" if j == 0 else ("w" if j == 1 else f"w^{j}")
        body = format_poly(a)
        nterms = sum(1 for c in a.coeffs if c)
        if not mono:
            parts.append(body)
            continue
        if a == UPoly.const(1):
            parts.append(mono)
        elif a == UPoly.const(-1):
            parts.append(f"-{mono}")
        elif nterms == 1:
            parts.append(f"{body}*{mono}")
        else:
            parts.append(f"({body})*{mono}")
    out = parts[0] if parts else "0"
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def format_req(R: REq) -> str:
    """Canonical text ``(N(z, w))/(D(z, w))`` with ``N = P(w, 1)``, ``D = Q(w, 1)``."""
    num = _wpoly_text(R.P.dehomogenize())
    den = _wpoly_text(R.Q.dehomogenize())
    if den == "1":
        return num
    return f"({num})/({den})"
