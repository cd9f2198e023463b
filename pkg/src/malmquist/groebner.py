"""Buchberger's algorithm over Q with Gebauer-Moeller pair pruning.

Internally a monomial is stored as an *order key*: a tuple whose native tuple
comparison is the monomial order and whose componentwise sum is the product.

* lex:      the exponents listed from the greatest variable to the least
* grevlex:  ``(total degree, -e_least, ..., -e_greatest)``

Coefficients are ``gmpy2.mpq`` inside the engine and ``Fraction`` outside.
Pairs are chosen by the normal strategy (least lcm degree, then pair index);
``sugar=True`` puts the sugar degree in front, which only matters for
inhomogeneous input.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field
from fractions import Fraction
from operator import add, sub
from operator import neg as neg_
from typing import Sequence

from gmpy2 import mpq

from .errors import BudgetExhausted
from .mpoly import MPoly

YES, NO, TRIVIAL = "yes", "no", "trivial"


@dataclass(frozen=True)
class MonOrder:
    """``kind`` is ``"lex"`` or ``"grevlex"``; ``perm`` lists variables greatest first."""

    kind: str
    perm: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("perm must be a permutation of the variable indices")

    @classmethod
    def default(cls, kind: str, nvars: int) -> "MonOrder":
        """Variable 0 greatest."""
        return cls(kind, tuple(range(nvars)))

    @property
    def nvars(self) -> int:
        return len(self.perm)

    def encode(self, e: Sequence[int]) -> tuple:
        if self.kind == "lex":
            return tuple(e[p] for p in self.perm)
        return (sum(e),) + tuple(-e[p] for p in reversed(self.perm))

    def decode(self, key: tuple) -> tuple[int, ...]:
        e = [0] * len(self.perm)
        if self.kind == "lex":
            for p, x in zip(self.perm, key):
                e[p] = x
        else:
            for p, x in zip(reversed(self.perm), key[1:]):
                e[p] = -x
        return tuple(e)

    def key(self, e: Sequence[int]) -> tuple:
        return self.encode(e)


class _Engine:
    def __init__(
        self, order: MonOrder, max_steps: int | None, deadline: float | None, sugar: bool = False
    ):
        self.order = order
        self.use_sugar = sugar
        self.lex = order.kind == "lex"
        self.max_steps = max_steps
        self.deadline = deadline
        self.steps = 0
        # monomial -> a basis element whose leading monomial divides it; entries
        # stay valid after pruning since every stored element lies in the ideal
        self.reducers: dict = {}

    # -- monomial arithmetic on keys --------------------------------------
    def divides(self, a: tuple, b: tuple) -> bool:
        if self.lex:
            for x, y in zip(a, b):
                if x > y:
                    return False
            return True
        for x, y in zip(a[1:], b[1:]):
            if x < y:
                return False
        return True

    def lcm(self, a: tuple, b: tuple) -> tuple:
        if self.lex:
            return tuple(map(max, a, b))
        rest = tuple(map(min, a[1:], b[1:]))
        return (-sum(rest),) + rest

    def degree(self, a: tuple) -> int:
        return sum(a) if self.lex else a[0]

    def coprime(self, a: tuple, b: tuple) -> bool:
        if self.lex:
            return all(not (x and y) for x, y in zip(a, b))
        return all(not (x and y) for x, y in zip(a[1:], b[1:]))

    # -- conversion --------------------------------------------------------
    def to_internal(self, p: MPoly) -> dict:
        return {
            self.order.encode(m): mpq(c.numerator, c.denominator) for m, c in p.terms.items()
        }

    def to_mpoly(self, p: dict) -> MPoly:
        n = self.order.nvars
        return MPoly(
            n,
            {
                self.order.decode(k): Fraction(int(c.numerator), int(c.denominator))
                for k, c in p.items()
            },
        )

    # -- polynomial operations ---------------------------------------------
    @staticmethod
    def monic(p: dict) -> dict:
        lc = p[max(p)]
        if lc == 1:
            return p
        inv = 1 / lc
        return {m: c * inv for m, c in p.items()}

    def check_budget(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExhausted("wall-clock budget exhausted")

    def normal_form(
        self, p: dict, basis: list[tuple[tuple, dict]], full: bool = True, cached: bool = False
    ) -> dict:
        """Reduce ``p`` by monic ``basis`` entries ``(lm, poly)``.

        ``cached`` may only be set while ``basis`` spans a growing ideal whose
        elements are never reduced against themselves.
        """
        p = dict(p)
        rem: dict = {}
        heap = [tuple(map(neg_, m)) for m in p]
        heapq.heapify(heap)
        counter = 0
        while heap:
            neg = heapq.heappop(heap)
            m = tuple(map(neg_, neg))
            if m not in p:
                continue
            c = p[m]
            hit = self.reducers.get(m) if cached else None
            if hit is None:
                for cand in basis:
                    if self.divides(cand[0], m):
                        hit = cand
                        if cached:
                            self.reducers[m] = hit
                        break
            if hit is None:
                rem[m] = c
                del p[m]
                if not full:
                    rem.update(p)
                    return rem
            else:
                g_lm, g = hit
                q = tuple(map(sub, m, g_lm))
                for gm, gc in g.items():
                    mm = tuple(map(add, q, gm))
                    old = p.get(mm)
                    if old is None:
                        p[mm] = -c * gc
                        heapq.heappush(heap, tuple(map(neg_, mm)))
                    else:
                        v = old - c * gc
                        if v:
                            p[mm] = v
                        else:
                            del p[mm]
            counter += 1
            if counter & 255 == 0:
                self.check_budget()
        return rem

    def spoly(self, f: tuple[tuple, dict], g: tuple[tuple, dict]) -> dict:
        (fl, fp), (gl, gp) = f, g
        l = self.lcm(fl, gl)
        qf = tuple(map(sub, l, fl))
        qg = tuple(map(sub, l, gl))
        out: dict = {}
        for m, c in fp.items():
            out[tuple(map(add, qf, m))] = c
        for m, c in gp.items():
            mm = tuple(map(add, qg, m))
            v = out.get(mm, 0) - c
            if v:
                out[mm] = v
            else:
                out.pop(mm, None)
        return out

    # -- Buchberger --------------------------------------------------------
    def run(self, gens: list[dict]) -> list[dict]:
        polys: list[tuple[tuple, dict]] = []
        sugar: list[int] = []
        G: list[int] = []
        B: list[tuple[int, int]] = []

        def insert(h: dict, s: int) -> bool:
            nonlocal G, B
            h = self.monic(h)
            lm = max(h)
            polys.append((lm, h))
            sugar.append(max(s, self.degree(lm)))
            ih = len(polys) - 1
            if self.degree(lm) == 0:
                return True
            G, B = self._update(polys, G, B, ih)
            return False

        work = sorted((p for p in gens if p), key=lambda p: max(p))
        for p in work:
            h = self.normal_form(p, [polys[i] for i in G], cached=True)
            if h and insert(h, max(self.degree(m) for m in p)):
                return [{polys[-1][0]: mpq(1)}]

        def pair_key(pair):
            i, j = pair
            li, lj = polys[i][0], polys[j][0]
            l = self.lcm(li, lj)
            dl = self.degree(l)
            if self.use_sugar:
                s = max(sugar[i] - self.degree(li), sugar[j] - self.degree(lj)) + dl
                return (s, dl, pair)
            return (dl, pair)

        while B:
            best = min(range(len(B)), key=lambda t: pair_key(B[t]))
            i, j = B.pop(best)
            pair_sugar = pair_key((i, j))[0]
            self.steps += 1
            if self.max_steps is not None and self.steps > self.max_steps:
                raise BudgetExhausted(
                    "step budget exhausted",
                    [self.to_mpoly(polys[g][1]) for g in G],
                    len(B) + 1,
                )
            self.check_budget()
            s = self.spoly(polys[i], polys[j])
            if not s:
                continue
            h = self.normal_form(s, [polys[g] for g in G], cached=True)
            if h and insert(h, pair_sugar):
                return [{polys[-1][0]: mpq(1)}]
        return self._reduce([polys[g] for g in G])

    def _update(self, polys, G, B, ih):
        lh = polys[ih][0]
        lcm_h = {g: self.lcm(lh, polys[g][0]) for g in G}
        C = list(G)
        D: list[int] = []
        while C:
            g1 = C.pop()
            l1 = lcm_h[g1]
            if self.coprime(lh, polys[g1][0]):
                D.append(g1)
                continue
            if any(self.divides(lcm_h[g2], l1) for g2 in C) or any(
                self.divides(lcm_h[g2], l1) for g2 in D
            ):
                continue
            D.append(g1)
        E = [(g, ih) for g in D if not self.coprime(lh, polys[g][0])]
        newB = []
        for g1, g2 in B:
            l12 = self.lcm(polys[g1][0], polys[g2][0])
            if (
                self.divides(lh, l12)
                and self.lcm(polys[g1][0], lh) != l12
                and self.lcm(lh, polys[g2][0]) != l12
            ):
                continue
            newB.append((g1, g2))
        newB.extend(E)
        newG = [g for g in G if not self.divides(lh, polys[g][0])]
        newG.append(ih)
        return newG, newB

    def _reduce(self, basis: list[tuple[tuple, dict]]) -> list[dict]:
        minimal = [
            b
            for i, b in enumerate(basis)
            if not any(
                self.divides(o[0], b[0]) and (o[0] != b[0] or j < i)
                for j, o in enumerate(basis)
                if j != i
            )
        ]
        out = []
        for i, b in enumerate(minimal):
            others = [o for j, o in enumerate(minimal) if j != i]
            r = self.normal_form(b[1], others)
            out.append(self.monic(r))
        out.sort(key=lambda p: max(p), reverse=True)
        return out


@dataclass
class GroebnerBasis:
    order: MonOrder
    polys: list[MPoly]
    zero_dimensional: str = field(default=NO)
    steps: int = 0

    @property
    def nvars(self) -> int:
        return self.order.nvars

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [leading_monomial(p, self.order) for p in self.polys]

    def is_trivial(self) -> bool:
        return self.zero_dimensional == TRIVIAL


def leading_monomial(p: MPoly, order: MonOrder) -> tuple[int, ...]:
    return max(p.terms, key=order.encode)


def leading_coefficient(p: MPoly, order: MonOrder) -> Fraction:
    return p.terms[leading_monomial(p, order)]


def buchberger(
    gens: Sequence[MPoly],
    order: MonOrder,
    max_steps: int | None = None,
    deadline: float | None = None,
    sugar: bool = False,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Raises :class:`BudgetExhausted` when ``max_steps`` S-pairs have been
    processed or ``deadline`` (a ``time.monotonic`` value) has passed.
    """
    if any(g.nvars != order.nvars for g in gens):
        raise ValueError("generators and order disagree on the number of variables")
    eng = _Engine(order, max_steps, deadline, sugar)
    basis = eng.run([eng.to_internal(g) for g in gens if g])
    gb = GroebnerBasis(order, [eng.to_mpoly(p) for p in basis], steps=eng.steps)
    gb.zero_dimensional = is_zero_dimensional(gb)
    return gb


def is_zero_dimensional(gb: GroebnerBasis) -> str:
    """``trivial`` if 1 is in the ideal, ``yes`` if every variable has a pure-power leading monomial."""
    lms = gb.leading_monomials()
    if any(sum(m) == 0 for m in lms):
        return TRIVIAL
    if not lms:
        return NO if gb.nvars else YES
    covered = set()
    for m in lms:
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            covered.add(support[0])
    return YES if len(covered) == gb.nvars else NO


def normal_form(p: MPoly, polys: Sequence[MPoly], order: MonOrder) -> MPoly:
    """Full remainder of ``p`` on division by ``polys`` (any order of divisors)."""
    eng = _Engine(order, None, None)
    basis = []
    for g in polys:
        if g:
            gi = eng.monic(eng.to_internal(g))
            basis.append((max(gi), gi))
    return eng.to_mpoly(eng.normal_form(eng.to_internal(p), basis))


def s_polynomial(f: MPoly, g: MPoly, order: MonOrder) -> MPoly:
    eng = _Engine(order, None, None)
    fi = eng.monic(eng.to_internal(f))
    gi = eng.monic(eng.to_internal(g))
    return eng.to_mpoly(eng.spoly((max(fi), fi), (max(gi), gi)))


def is_groebner(polys: Sequence[MPoly], order: MonOrder) -> bool:
    """Every S-polynomial reduces to zero."""
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if normal_form(s_polynomial(polys[i], polys[j], order), polys, order):
                return False
    return True
