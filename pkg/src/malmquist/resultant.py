"""Sylvester matrices, fraction-free determinants and Bezout cofactors.

Basis convention: the domain of ``(A, B) -> A*P + B*Q`` is ordered as the
monomials ``X**j * Y**(d-1-j)`` of A with j decreasing, then the same for B;
the codomain as ``X**j * Y**(2d-1-j)`` with j decreasing.  Row ``r < d`` of the
Sylvester matrix therefore holds the coefficients of P shifted right by ``r``
and row ``d + r`` those of Q.
"""

from __future__ import annotations

import time
from typing import Callable, Sequence

from .errors import BudgetExhausted, SingularSystem
from .forms import BiForm
from .poly import UPoly

Matrix = list[list]


def sylvester_rows(p: Sequence, q: Sequence, zero) -> Matrix:
    """Sylvester matrix of two coefficient sequences of equal length ``d + 1``."""
    if len(p) != len(q):
        raise ValueError(f"form degrees differ: {len(p) - 1} vs {len(q) - 1}")
    d = len(p) - 1
    if d < 1:
        raise ValueError("forms must have degree at least 1")
    n = 2 * d
    rows = []
    for src in (p, q):
        for r in range(d):
            row = [zero] * n
            for i, c in enumerate(src):
                row[r + i] = c
            rows.append(row)
    return rows


def sylvester_matrix(P: BiForm, Q: BiForm) -> Matrix:
    if P.d != Q.d:
        raise ValueError(f"form degrees differ: {P.d} vs {Q.d}")
    return sylvester_rows(P.coeffs, Q.coeffs, UPoly())


def _exquo(a, b):
    if isinstance(a, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("inexact integer division")
        return q
    return a.exquo(b)


def bareiss_det(M: Matrix, one, deadline: float | None = None):
    """Determinant over an integral domain by single-step fraction-free elimination.

    Entries must support ``+ - *``, truthiness for zero tests, and ``exquo``
    (plain ints are also accepted).
    """
    n = len(M)
    if n == 0:
        return one
    A = [list(row) for row in M]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not A[k][k]:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return one * 0
        pivot = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                v = row_i[j] * pivot
                if aik and row_k[j]:
                    v = v - aik * row_k[j]
                row_i[j] = _exquo(v, prev) if prev != one else v
            if deadline is not None and time.monotonic() > deadline:
                raise BudgetExhausted("determinant exceeded time budget")
        prev = pivot
    det = A[n - 1][n - 1]
    return det if sign > 0 else -det


def cofactor_det(M: Matrix, one):
    """Laplace expansion along the first row; exponential, test oracle only."""
    n = len(M)
    if n == 0:
        return one
    if n == 1:
        return M[0][0]
    total = one * 0
    for j in range(n):
        if not M[0][j]:
            continue
        minor = [row[:j] + row[j + 1 :] for row in M[1:]]
        term = M[0][j] * cofactor_det(minor, one)
        total = total + term if j % 2 == 0 else total - term
    return total


def _minor(M: Matrix, r: int, c: int) -> Matrix:
    return [row[:c] + row[c + 1 :] for i, row in enumerate(M) if i != r]


def resultant(P: BiForm, Q: BiForm) -> UPoly:
    return bareiss_det(sylvester_matrix(P, Q), UPoly.const(1))


def cramer_cofactors(M: Matrix, target: int, one, det: Callable = bareiss_det) -> list:
    """Row vector ``v`` with ``v @ M == det(M) * e_target``, each entry a signed minor."""
    n = len(M)
    return [
        det(_minor(M, r, target), one) if (r + target) % 2 == 0 else -det(_minor(M, r, target), one)
        for r in range(n)
    ]


def bezout_cofactors(P: BiForm, Q: BiForm, i: int) -> tuple[BiForm, BiForm]:
    """Forms A_i, B_i of degree d-1 with ``A_i P + B_i Q = Res(P, Q) * X_i**(2d-1)``.

    ``i = 1`` targets ``X**(2d-1)`` and ``i = 0`` targets ``Y**(2d-1)``.
    """
    if i not in (0, 1):
        raise ValueError("i must be 0 or 1")
    M = sylvester_matrix(P, Q)
    one = UPoly.const(1)
    if not bareiss_det(M, one):
        raise SingularSystem("Res(P, Q) = 0: P and Q share a factor")
    d = P.d
    target = 0 if i == 1 else 2 * d - 1
    v = cramer_cofactors(M, target, one)
    return BiForm(v[:d]), BiForm(v[d:])
