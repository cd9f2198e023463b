"""Logarithmic Weil heights over Q.

Over Q the sum over places collapses: scale the projective coordinates to
coprime integers and take the log of the largest absolute value.  The integer
``norm`` is kept next to the float so inequalities can be compared exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .equation import REq
from .poly import RatFunc, UPoly, integer_normalize


@dataclass(frozen=True)
class HeightReport:
    value: float
    normalized_coords: tuple[int, ...]
    norm: int

    def __float__(self):
        return self.value


def height_projective(coords: Sequence) -> HeightReport:
    coords = [c if isinstance(c, Fraction) else Fraction(c) for c in coords]
    if not any(coords):
        raise ValueError("the all-zero tuple is not a projective point")
    ints = integer_normalize(coords)
    norm = max(abs(c) for c in ints)
    return HeightReport(math.log(norm), ints, norm)


def height_ratfunc(f: RatFunc) -> HeightReport:
    return height_projective(f.coefficient_tuple())


def height_poly(p: UPoly) -> HeightReport:
    """Projective height of a polynomial's coefficient tuple (not as a function)."""
    return height_projective(p.coeffs)


def height_req(R: REq) -> HeightReport:
    return height_projective(R.coefficient_multiset())
