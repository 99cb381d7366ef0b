"""Reduced Burau representation and the Alexander polynomial of braid closures.

For b in B_n, (1 + t + ... + t^{n-1}) Delta(t) = det(I - rho(b)) up to a
unit +-t^m, where rho is the reduced Burau representation. Matrices are lists
of rows of LaurentPoly1; the determinant uses fraction-free (Bareiss)
elimination so every division is exact.
"""

from __future__ import annotations

import math

from .braid import BraidWord, closure_component_count
from .errors import NotAKnotError
from .laurent import LaurentPoly1

Matrix = list[list[LaurentPoly1]]

_ZERO = LaurentPoly1()
_ONE = LaurentPoly1.constant(1)
_T = LaurentPoly1.monomial(1)
_MINUS_T = LaurentPoly1.monomial(1, -1)
_TINV = LaurentPoly1.monomial(-1)
_MINUS_TINV = LaurentPoly1.monomial(-1, -1)


def identity_matrix(m: int) -> Matrix:
    return [[_ONE if r == c else _ZERO for c in range(m)] for r in range(m)]


def generator_row(n: int, e: int) -> dict[int, LaurentPoly1]:
    """The single non-identity row of rho(sigma_i^{+-1}), as {column: entry} (0-based).

    rho(sigma_i) has row i equal to (t, -t, 1) in columns i-1, i, i+1;
    rho(sigma_i^-1) has (1, -1/t, 1/t) there. Entries off the matrix are dropped.
    """
    i = abs(e)
    r = i - 1
    m = n - 1
    if e > 0:
        entries = {r - 1: _T, r: _MINUS_T, r + 1: _ONE}
    else:
        entries = {r - 1: _ONE, r: _MINUS_TINV, r + 1: _TINV}
    return {c: v for c, v in entries.items() if 0 <= c < m}


def generator_matrix(n: int, e: int) -> Matrix:
    mat = identity_matrix(n - 1)
    r = abs(e) - 1
    row = generator_row(n, e)
    mat[r] = [row.get(c, _ZERO) for c in range(n - 1)]
    return mat


def burau_matrix(a: BraidWord) -> Matrix:
    """Reduced Burau image of ``a`` (product left to right)."""
    m = a.strands - 1
    M = identity_matrix(m)
    for e in a.letters:
        # M <- M G where G differs from the identity only in row r
        r = abs(e) - 1
        row = generator_row(a.strands, e)
        col_r = [M[k][r] for k in range(m)]
        for c, g in row.items():
            delta = g - 1 if c == r else g
            if delta.is_zero():
                continue
            for k in range(m):
                if not col_r[k].is_zero():
                    M[k][c] = M[k][c] + col_r[k] * delta
    return M


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    m = len(A)
    out = []
    for i in range(m):
        row = []
        for j in range(len(B[0])):
            acc = _ZERO
            for k in range(len(B)):
                if not A[i][k].is_zero() and not B[k][j].is_zero():
                    acc = acc + A[i][k] * B[k][j]
            row.append(acc)
        out.append(row)
    return out


def determinant(M: Matrix) -> LaurentPoly1:
    """Bareiss fraction-free determinant over Z[t, 1/t]."""
    m = len(M)
    if m == 0:
        return _ONE
    A = [row[:] for row in M]
    sign = 1
    prev = _ONE
    for k in range(m - 1):
        if A[k][k].is_zero():
            swap = next((r for r in range(k + 1, m) if not A[r][k].is_zero()), None)
            if swap is None:
                return _ZERO
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]).exact_div(prev)
        prev = A[k][k]
    return A[m - 1][m - 1] * sign


def normalize_alexander(poly: LaurentPoly1) -> LaurentPoly1:
    """Shift to the symmetric representative and fix the sign so Delta(1) = 1."""
    if poly.is_zero():
        return poly
    lo, hi = poly.min_degree(), poly.max_degree()
    if (lo + hi) % 2:
        raise ValueError(f"polynomial {poly} has odd span and no symmetric representative")
    poly = poly.shift(-(lo + hi) // 2)
    if poly.evaluate(1) < 0:
        poly = -poly
    return poly


def alexander(a: BraidWord) -> LaurentPoly1:
    if closure_component_count(a) != 1:
        raise NotAKnotError("Alexander polynomial is computed for knot closures only")
    n = a.strands
    if n == 1:
        return _ONE
    M = burau_matrix(a)
    I_minus = [[(_ONE if r == c else _ZERO) - M[r][c] for c in range(n - 1)] for r in range(n - 1)]
    det = determinant(I_minus)
    # divide by 1 + t + ... + t^{n-1} = (1 - t^n) / (1 - t)
    quantum_n = LaurentPoly1({k: 1 for k in range(n)})
    poly = normalize_alexander(det.exact_div(quantum_n))
    if abs(poly.evaluate(1)) != 1:
        raise ArithmeticError(f"knot Alexander polynomial must satisfy |Delta(1)| = 1, got {poly}")
    return poly


def torus_alexander(p: int, q: int) -> LaurentPoly1:
    """(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), symmetrized."""
    if p < 2 or q < 2:
        raise ValueError("need p, q >= 2")
    if math.gcd(p, q) != 1:
        raise ValueError(f"T({p},{q}) is not a knot: gcd = {math.gcd(p, q)}")

    def tm1(k: int) -> LaurentPoly1:
        return LaurentPoly1({k: 1, 0: -1})

    num = tm1(p * q) * tm1(1)
    den = tm1(p) * tm1(q)
    return normalize_alexander(num.exact_div(den))
