"""Text input: equations ``R(z, w)`` and rational functions ``f(z)``.

Grammar (precedence climbing)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := ('-' | '+') unary | power
    power   := atom ('^' unary)?            right-associative
    atom    := INTEGER | NAME | 'f(z)' | '(' expr ')'

Binary operators are left-associative except ``^``.  Exponents must evaluate to
nonnegative integer constants.  Only integer literals exist; ``1/2`` is a
division.  Inside an equation ``f`` is a synonym for ``w``.

``parse_ast`` returns nested tuples so structure can be compared directly:
``("num", 3)``, ``("var", "z")``, ``("neg", a)``, ``(op, a, b)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .equation import KINDS, REq, req_from_forms
from .errors import DivisionByZeroExpression, NonIntegerExponent, ParseError
from .forms import BiForm
from .mpoly import MPoly
from .poly import RatFunc, UPoly, poly_gcd, ratfunc_reduce

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\*\*|[-+*/^()])|(\S))")
_BINARY = {"+": 1, "-": 1, "*": 2, "/": 2}


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op", "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace is left
            break
        num, name, op, bad = m.groups()
        start = m.start(m.lastindex)
        if bad is not None:
            if bad == ".":
                raise ParseError("decimal literals are not supported; write p/q", start)
            raise ParseError(f"unexpected character {bad!r}", start)
        if num is not None:
            if m.end() < len(text) and text[m.end()] == ".":
                raise ParseError("decimal literals are not supported; write p/q", m.end())
            out.append(Token("num", num, start))
        elif name is not None:
            out.append(Token("name", name, start))
        else:
            out.append(Token("op", "^" if op == "**" else op, start))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> None:
        if self.tok.text != text or self.tok.kind != "op":
            raise ParseError(f"expected {text!r}", self.tok.pos)
        self.take()

    def parse(self):
        if self.tok.kind == "end":
            raise ParseError("empty expression", 0)
        node = self.binary(1)
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return node

    def binary(self, min_prec: int):
        left = self.unary()
        while self.tok.kind == "op" and _BINARY.get(self.tok.text, 0) >= min_prec:
            op = self.take()
            right = self.binary(_BINARY[op.text] + 1)
            left = (op.text, left, right, op.pos)
        return left

    def unary(self):
        if self.tok.kind == "op" and self.tok.text in "+-":
            op = self.take()
            inner = self.unary()
            return ("neg", inner, op.pos) if op.text == "-" else inner
        return self.power()

    def power(self):
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            op = self.take()
            return ("^", base, self.unary(), op.pos)
        return base

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.take()
            return ("num", int(t.text), t.pos)
        if t.kind == "name":
            self.take()
            if t.text == "f" and self.tok.text == "(":
                # f(z) is accepted as a spelling of the unknown
                self.take()
                if self.tok.text != "z":
                    raise ParseError("only f(z) may be applied", self.tok.pos)
                self.take()
                self.expect(")")
            return ("var", t.text, t.pos)
        if t.kind == "op" and t.text == "(":
            self.take()
            node = self.binary(1)
            self.expect(")")
            return node
        if t.kind == "end":
            raise ParseError("unexpected end of input", t.pos)
        raise ParseError(f"unexpected {t.text!r}", t.pos)


def _strip_positions(node):
    if node[0] in ("num", "var"):
        return node[:2]
    if node[0] == "neg":
        return ("neg", _strip_positions(node[1]))
    return (node[0], _strip_positions(node[1]), _strip_positions(node[2]))


def parse_ast(text: str):
    """Syntax tree of ``text`` without source positions."""
    return _strip_positions(_Parser(text).parse())


# -- evaluation to a quotient of polynomials in (z, w) --------------------------

_Z, _W = 0, 1


def _evaluate(node, names: dict[str, int]) -> tuple[MPoly, MPoly]:
    """``(num, den)`` as MPoly in the variables listed in ``names``."""
    n = 2
    tag = node[0]
    if tag == "num":
        return MPoly.const(node[1], n), MPoly.const(1, n)
    if tag == "var":
        if node[1] not in names:
            allowed = ", ".join(sorted(names))
            raise ParseError(f"unknown name {node[1]!r} (allowed: {allowed})", node[2])
        return MPoly.var(names[node[1]], n), MPoly.const(1, n)
    if tag == "neg":
        a, b = _evaluate(node[1], names)
        return -a, b
    op, left, right, pos = node
    if op == "^":
        e = _exponent(right, names)
        a, b = _evaluate(left, names)
        return a**e, b**e
    a, b = _evaluate(left, names)
    c, d = _evaluate(right, names)
    if op == "+":
        return a * d + c * b, b * d
    if op == "-":
        return a * d - c * b, b * d
    if op == "*":
        return a * c, b * d
    if not c:
        raise DivisionByZeroExpression("division by an expression that is identically zero", pos)
    return a * d, b * c


def _exponent(node, names) -> int:
    a, b = _evaluate(node, names)
    if a.total_degree() > 0 or b.total_degree() > 0:
        raise NonIntegerExponent("exponents must be constants", _first_pos(node))
    value = a.evaluate((0, 0)) / b.evaluate((0, 0))
    if value.denominator != 1 or value < 0:
        raise NonIntegerExponent(
            f"exponents must be nonnegative integers, got {value}", _first_pos(node)
        )
    return int(value)


def _first_pos(node) -> int:
    """Position of the leftmost token of ``node``."""
    while node[0] not in ("num", "var", "neg"):
        node = node[1]
    return node[-1]


# -- polynomials in w over Q[z] ---------------------------------------------------


def _wcoeffs(p: MPoly) -> list[UPoly]:
    """Coefficient list by powers of w, each a polynomial in z."""
    out = []
    for part in p.collect(_W):
        terms = {}
        for e, c in part.terms.items():
            terms[e[_Z]] = c
        top = max(terms, default=-1)
        out.append(UPoly([terms.get(i, 0) for i in range(top + 1)]))
    while out and out[-1].is_zero():
        out.pop()
    return out


def _wdeg(a: list[UPoly]) -> int:
    return len(a) - 1


def _wcontent(a: list[UPoly]) -> UPoly:
    g = UPoly()
    for c in a:
        g = poly_gcd(g, c)
    return g


def _wscale(a: list[UPoly], c: UPoly) -> list[UPoly]:
    return [x * c for x in a]


def _wexquo_scalar(a: list[UPoly], c: UPoly) -> list[UPoly]:
    return [x.exquo(c) for x in a]


def _wsub_shifted(a: list[UPoly], b: list[UPoly], shift: int, c: UPoly) -> list[UPoly]:
    """``a - c * w^shift * b`` with trailing zeros stripped."""
    out = list(a)
    for i, x in enumerate(b):
        out[i + shift] = out[i + shift] - x * c
    while out and out[-1].is_zero():
        out.pop()
    return out


def _wprimitive(a: list[UPoly]) -> list[UPoly]:
    return _wexquo_scalar(a, _wcontent(a)) if a else a


def _prem(a: list[UPoly], b: list[UPoly]) -> list[UPoly]:
    lb = b[-1]
    while a and _wdeg(a) >= _wdeg(b):
        la = a[-1]
        a = _wsub_shifted(_wscale(a, lb), b, _wdeg(a) - _wdeg(b), la)
    return a


def wpoly_gcd(a: list[UPoly], b: list[UPoly]) -> list[UPoly]:
    """A gcd in Q[z][w] by the primitive remainder sequence; the zero list is 0."""
    if not a:
        return b
    if not b:
        return a
    c = poly_gcd(_wcontent(a), _wcontent(b))
    p, q = _wprimitive(a), _wprimitive(b)
    if _wdeg(p) < _wdeg(q):
        p, q = q, p
    while q:
        r = _prem(p, q)
        p, q = q, _wprimitive(r)
    return _wscale(p, c)


def wpoly_exquo(a: list[UPoly], b: list[UPoly]) -> list[UPoly]:
    """Exact quotient in Q[z][w]; raises ArithmeticError if ``b`` does not divide ``a``."""
    quot = [UPoly()] * max(_wdeg(a) - _wdeg(b) + 1, 0)
    lb = b[-1]
    while a and _wdeg(a) >= _wdeg(b):
        s = _wdeg(a) - _wdeg(b)
        c = a[-1].exquo(lb)
        quot[s] = c
        a = _wsub_shifted(a, b, s, c)
    if a:
        raise ArithmeticError("inexact division in Q[z][w]")
    return quot


def _homogenize(a: list[UPoly], d: int) -> BiForm:
    # slot i of a degree-d form holds X^(d-i) Y^i, the coefficient of w^(d-i)
    return BiForm([a[d - i] if d - i < len(a) else UPoly() for i in range(d + 1)])


def forms_from_text(text: str) -> tuple[BiForm, BiForm]:
    """Reduced homogeneous pair ``(P, Q)`` for the expression ``R(z, w)``."""
    num, den = _evaluate(_Parser(text).parse(), {"z": _Z, "w": _W, "f": _W})
    if not den:
        raise DivisionByZeroExpression("denominator is identically zero", 0)
    a, b = _wcoeffs(num), _wcoeffs(den)
    if a:
        g = wpoly_gcd(a, b)
        a, b = wpoly_exquo(a, g), wpoly_exquo(b, g)
    d = max(_wdeg(a), _wdeg(b), 0)
    return _homogenize(a, d), _homogenize(b, d)


def parse_equation(kind: str, text: str) -> REq:
    """Canonical REq for ``f(z+1) = R`` or ``f' = R`` with ``R`` given as text."""
    if kind not in KINDS:
        raise ValueError(f"unknown equation kind {kind!r}")
    P, Q = forms_from_text(text)
    return req_from_forms(kind, P, Q)


def parse_ratfunc(text: str) -> RatFunc:
    """A rational function of z in lowest terms."""
    num, den = _evaluate(_Parser(text).parse(), {"z": _Z})
    if not den:
        raise DivisionByZeroExpression("denominator is identically zero", 0)
    return ratfunc_reduce(_zpoly(num), _zpoly(den))


def _zpoly(p: MPoly) -> UPoly:
    terms = {e[_Z]: c for e, c in p.terms.items()}
    top = max(terms, default=-1)
    return UPoly([terms.get(i, Fraction(0)) for i in range(top + 1)])


@dataclass(frozen=True)
class EquationSpec:
    kind: str
    source_text: str
    parsed: REq

    @classmethod
    def from_text(cls, kind: str, text: str) -> "EquationSpec":
        return cls(kind, text, parse_equation(kind, text))
