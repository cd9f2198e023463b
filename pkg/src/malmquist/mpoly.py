"""Sparse multivariate polynomials over Q."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]


class MPoly:
    """Polynomial in ``nvars`` variables stored as ``{exponent tuple: Fraction}``.

    Zero coefficients are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    if len(m) != nvars:
                        raise ValueError(f"monomial {m} has wrong length for {nvars} variables")
                    clean[tuple(m)] = c if isinstance(c, Fraction) else Fraction(c)
        self.terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "MPoly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, c, nvars: int) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, i: int, nvars: int) -> "MPoly":
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MPoly.const(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MPoly({self.nvars}, {self.terms!r})"

    def __str__(self):
        return self.format()

    def format(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{i}" for i in range(self.nvars)]
        parts = []
        for m in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.terms[m]
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e)
            a = abs(c)
            if not mono:
                body = str(a)
            else:
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for s, b in parts[1:]:
            out += f" {s} {b}"
        return out

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return MPoly.const(other, self.nvars)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return MPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            other = Fraction(other)
            if not other:
                return MPoly.zero(self.nvars)
            return MPoly._raw(self.nvars, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = MPoly.const(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((m[i] for m in self.terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(m) for m in self.terms}
        if not degs:
            return True
        return len(degs) == 1 and (degree is None or degs == {degree})

    def leading_term_lex(self) -> tuple[Monomial, Fraction]:
        m = max(self.terms)
        return m, self.terms[m]

    def exquo(self, other: "MPoly") -> "MPoly":
        """Exact quotient; raises ``ArithmeticError`` on a nonzero remainder."""
        other = self._coerce(other)
        if not other.terms:
            raise ZeroDivisionError("division by zero polynomial")
        lm, lc = other.leading_term_lex()
        rem = dict(self.terms)
        quot: dict = {}
        while rem:
            m = max(rem)
            if any(a < b for a, b in zip(m, lm)):
                raise ArithmeticError("inexact multivariate division")
            q_m = tuple(a - b for a, b in zip(m, lm))
            q_c = rem[m] / lc
            quot[q_m] = q_c
            for m2, c2 in other.terms.items():
                mm = tuple(a + b for a, b in zip(q_m, m2))
                v = rem.get(mm, 0) - q_c * c2
                if v:
                    rem[mm] = v
                else:
                    rem.pop(mm, None)
        return MPoly._raw(self.nvars, quot)

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            t = c
            for x, e in zip(point, m):
                if e:
                    t *= Fraction(x) ** e
            total += t
        return total

    def specialize(self, values: Mapping[int, object]) -> "MPoly":
        """Substitute constants for some variables; the variable count is kept."""
        out: dict = {}
        for m, c in self.terms.items():
            t = c
            e = list(m)
            for i, v in values.items():
                if e[i]:
                    t *= Fraction(v) ** e[i]
                    e[i] = 0
            if t:
                key = tuple(e)
                out[key] = out.get(key, 0) + t
        return MPoly(self.nvars, out)

    def drop_variable(self, i: int) -> "MPoly":
        """Remove variable ``i``, which must not occur."""
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                raise ValueError(f"variable {i} still occurs")
            out[m[:i] + m[i + 1 :]] = c
        return MPoly._raw(self.nvars - 1, out)

    def embed(self, nvars: int, positions: Sequence[int]) -> "MPoly":
        """Re-index into ``nvars`` variables, old variable ``j`` going to ``positions[j]``."""
        out = {}
        for m, c in self.terms.items():
            e = [0] * nvars
            for j, p in enumerate(positions):
                e[p] += m[j]
            out[tuple(e)] = c
        return MPoly._raw(nvars, out)

    def collect(self, i: int) -> list["MPoly"]:
        """Split by powers of variable ``i``: ``self = sum(out[j] * x_i**j)``."""
        deg = self.degree_in(i)
        out: list[dict] = [{} for _ in range(deg + 1)]
        for m, c in self.terms.items():
            e = list(m)
            j = e[i]
            e[i] = 0
            out[j][tuple(e)] = c
        return [MPoly._raw(self.nvars, t) for t in out]

    def variables(self) -> set[int]:
        return {i for m in self.terms for i, e in enumerate(m) if e}


def mpoly_sum(items: Iterable[MPoly], nvars: int) -> MPoly:
    out: dict = {}
    for p in items:
        for m, c in p.terms.items():
            out[m] = out.get(m, 0) + c
    return MPoly(nvars, out)
