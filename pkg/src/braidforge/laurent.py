"""Exact Laurent polynomials with integer coefficients.

``LaurentPoly1`` is a polynomial in ``t`` (Alexander polynomials),
``LaurentPoly2`` a polynomial in ``a`` and ``z`` (HOMFLY-PT). Both are
immutable, hashable, and never store zero coefficients.
"""

from __future__ import annotations

from typing import Iterable, Mapping


def _clean(terms: Mapping) -> dict:
    return {k: v for k, v in terms.items() if v != 0}


class LaurentPoly1:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms = _clean(dict(terms or {}))
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def constant(cls, c: int) -> "LaurentPoly1":
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly1":
        return cls({exp: coeff})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> "LaurentPoly1":
        out: dict[int, int] = {}
        for e, c in pairs:
            out[e] = out.get(e, 0) + c
        return cls(out)

    # -- inspection ---------------------------------------------------------
    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int:
        return min(self._terms)

    def max_degree(self) -> int:
        return max(self._terms)

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def evaluate(self, t: int) -> int:
        """Value at an integer point; only meaningful for t = +-1 or when no negative exponents."""
        if t in (1, -1):
            return sum(c * (t ** (e % 2)) for e, c in self._terms.items())
        from fractions import Fraction

        total = sum(c * Fraction(t) ** e for e, c in self._terms.items())
        if total.denominator != 1:
            raise ValueError("non-integral value")
        return int(total)

    def to_pairs(self) -> list[list[int]]:
        return [[e, self._terms[e]] for e in sorted(self._terms)]

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly1.constant(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly1(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly1({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly1.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly1({e: c * other for e, c in self._terms.items()})
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly1(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for monomials")
        result = LaurentPoly1.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly1":
        """Multiply by t**k."""
        return LaurentPoly1({e + k: c for e, c in self._terms.items()})

    def invert_variable(self) -> "LaurentPoly1":
        """Substitute t -> 1/t."""
        return LaurentPoly1({-e: c for e, c in self._terms.items()})

    def exact_div(self, other: "LaurentPoly1") -> "LaurentPoly1":
        """Exact quotient self / other in Z[t, 1/t]; raises ValueError if it does not exist."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly1()
        lo_n, lo_d = self.min_degree(), other.min_degree()
        num = [0] * (self.max_degree() - lo_n + 1)
        for e, c in self._terms.items():
            num[e - lo_n] = c
        den = [0] * (other.max_degree() - lo_d + 1)
        for e, c in other._terms.items():
            den[e - lo_d] = c
        dd = len(den) - 1
        lead = den[-1]
        if len(num) - 1 < dd:
            raise ValueError("inexact division")
        quot = [0] * (len(num) - dd)
        for i in range(len(num) - 1, dd - 1, -1):
            c = num[i]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise ValueError("inexact division")
            quot[i - dd] = q
            for j in range(dd + 1):
                num[i - dd + j] -= q * den[j]
        if any(num):
            raise ValueError("inexact division")
        return LaurentPoly1({i + lo_n - lo_d: c for i, c in enumerate(quot) if c})

    # -- protocol -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly1.constant(other)
        if not isinstance(other, LaurentPoly1):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly1({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' + mono if mono else ''}"
            parts.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


class LaurentPoly2:
    """Integer Laurent polynomial in ``a`` and ``z``; keys are ``(a_exp, z_exp)``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self._terms = _clean(dict(terms or {}))
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly2":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a_exp: int, z_exp: int, coeff: int = 1) -> "LaurentPoly2":
        return cls({(a_exp, z_exp): coeff})

    @classmethod
    def from_triples(cls, triples: Iterable[Iterable[int]]) -> "LaurentPoly2":
        out: dict[tuple[int, int], int] = {}
        for a, z, c in triples:
            out[(a, z)] = out.get((a, z), 0) + c
        return cls(out)

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def a_degrees(self) -> tuple[int, int]:
        exps = [a for a, _ in self._terms]
        return min(exps), max(exps)

    def z_degrees(self) -> tuple[int, int]:
        exps = [z for _, z in self._terms]
        return min(exps), max(exps)

    def a_breadth(self) -> int:
        lo, hi = self.a_degrees()
        return hi - lo

    def to_triples(self) -> list[list[int]]:
        return [[a, z, self._terms[(a, z)]] for a, z in sorted(self._terms)]

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2.constant(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly2(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly2({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly2({k: c * other for k, c in self._terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (a1, z1), c1 in self._terms.items():
            for (a2, z2), c2 in other._terms.items():
                key = (a1 + a2, z1 + z2)
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPoly2(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for monomials")
        result = LaurentPoly2.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def shift(self, da: int = 0, dz: int = 0) -> "LaurentPoly2":
        """Multiply by a**da * z**dz."""
        return LaurentPoly2({(a + da, z + dz): c for (a, z), c in self._terms.items()})

    def mirror(self) -> "LaurentPoly2":
        """HOMFLY of the mirror image: a -> -1/a (z fixed) in the a-z convention used here."""
        return LaurentPoly2({(-a, z): c * (-1) ** (a % 2) for (a, z), c in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2.constant(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly2({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for a, z in sorted(self._terms, key=lambda k: (-k[0], -k[1])):
            c = self._terms[(a, z)]
            factors = []
            if a:
                factors.append("a" if a == 1 else f"a^{a}")
            if z:
                factors.append("z" if z == 1 else f"z^{z}")
            mono = "*".join(factors)
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' + mono if mono else ''}"
            parts.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


ONE = LaurentPoly2.constant(1)

# (a - 1/a) / z: HOMFLY of the two-component unlink.
DELTA = LaurentPoly2({(1, -1): 1, (-1, -1): -1})
