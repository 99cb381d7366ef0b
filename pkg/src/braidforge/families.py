"""Torus braids, T-links, twisted torus knots and half twists.

A torus braid B_{i,j}^r is the ascending run sigma_i ... sigma_{j-1} repeated
r times. Factored braids keep a list of such factors so that the full-width
factor and its full twists stay visible to the classifier.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Iterable, Sequence

from .braid import BraidWord, compose_all, inverse
from .errors import InvalidSpecError


@dataclasses.dataclass(frozen=True)
class TorusBraidFactor:
    i: int
    j: int
    r: int

    def __post_init__(self):
        if not (1 <= self.i < self.j):
            raise InvalidSpecError(f"torus braid window needs 1 <= i < j, got ({self.i},{self.j})")
        if self.r == 0:
            raise InvalidSpecError("zero-exponent factors are not stored")

    @property
    def width(self) -> int:
        return self.j - self.i + 1

    def word(self, strands: int) -> BraidWord:
        if self.r > 0:
            return torus_braid(self.i, self.j, self.r, strands)
        return inverse(torus_braid(self.i, self.j, -self.r, strands))

    def __str__(self):
        return f"({self.i},{self.j},{self.r})"


def _merge(factors: Iterable[TorusBraidFactor | tuple[int, int, int]]) -> tuple[TorusBraidFactor, ...]:
    out: list[tuple[int, int, int]] = []
    for f in factors:
        i, j, r = (f.i, f.j, f.r) if isinstance(f, TorusBraidFactor) else f
        if out and out[-1][:2] == (i, j):
            out[-1] = (i, j, out[-1][2] + r)
        else:
            out.append((i, j, r))
        if out and out[-1][2] == 0:
            out.pop()
    return tuple(TorusBraidFactor(*f) for f in out)


@dataclasses.dataclass(frozen=True)
class FactoredBraid:
    """Product of torus-braid factors on ``strands`` strands.

    Adjacent factors with the same window are merged and zero exponents
    dropped at construction.
    """

    strands: int
    factors: tuple[TorusBraidFactor, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise InvalidSpecError("strand count must be positive")
        merged = _merge(self.factors)
        for f in merged:
            if f.j > self.strands:
                raise InvalidSpecError(f"factor {f} does not fit on {self.strands} strands")
        object.__setattr__(self, "factors", merged)

    def word(self) -> BraidWord:
        return expand(self)

    def is_positive(self) -> bool:
        return all(f.r > 0 for f in self.factors)

    def __str__(self):
        return f"FB@{self.strands}[" + ",".join(str(f) for f in self.factors) + "]"


@dataclasses.dataclass(frozen=True)
class TLinkSpec:
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(r), int(s)) for r, s in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if not pairs:
            raise InvalidSpecError("a T-link needs at least one pair")
        prev = 1
        for r, s in pairs:
            if r < 2 or r <= prev:
                raise InvalidSpecError(f"T-link widths must satisfy 2 <= r_1 < r_2 < ..., got {pairs}")
            if s < 1:
                raise InvalidSpecError(f"T-link exponents must be positive, got {pairs}")
            prev = r

    @property
    def strands(self) -> int:
        return self.pairs[-1][0]

    def __str__(self):
        return "TL[" + ",".join(f"({r},{s})" for r, s in self.pairs) + "]"


@dataclasses.dataclass(frozen=True)
class TwistedTorusSpec:
    """T(p, q; r, s): the (p, q) torus knot with s full twists on r adjacent strands."""

    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        if self.p < 2 or self.q < 1:
            raise InvalidSpecError(f"need p >= 2 and q >= 1, got p={self.p}, q={self.q}")
        if not (2 <= self.r < self.p):
            raise InvalidSpecError(f"need 2 <= r < p, got r={self.r}, p={self.p}")
        if self.s == 0:
            raise InvalidSpecError("s = 0 is a plain torus knot, not a twisted one")

    @property
    def coprime(self) -> bool:
        return math.gcd(self.p, self.q) == 1

    def __str__(self):
        return f"TTK({self.p},{self.q};{self.r},{self.s})"


@dataclasses.dataclass(frozen=True)
class HalfTwistSpec:
    i: int
    j: int
    t: int

    def __post_init__(self):
        if not (1 <= self.i < self.j):
            raise InvalidSpecError(f"need 1 <= i < j, got ({self.i},{self.j})")
        if not (0 < self.t < self.j - self.i + 1):
            raise InvalidSpecError(f"need 0 < t < j - i + 1, got t={self.t}")


def _check_window(i: int, j: int, strands: int) -> None:
    if not (1 <= i < j <= strands):
        raise InvalidSpecError(f"window [{i},{j}] does not fit 1 <= i < j <= {strands}")


def torus_braid(i: int, j: int, r: int, strands: int) -> BraidWord:
    _check_window(i, j, strands)
    if r < 0:
        raise InvalidSpecError("negative exponents: use inverse(torus_braid(...))")
    return BraidWord(strands, tuple(range(i, j)) * r)


def full_twist(n: int, k: int = 1) -> BraidWord:
    """k full twists on n strands."""
    if n < 2 or k < 1:
        raise InvalidSpecError(f"need n >= 2 and k >= 1, got n={n}, k={k}")
    return torus_braid(1, n, k * n, n)


def tlink_factored(spec: TLinkSpec) -> FactoredBraid:
    return FactoredBraid(spec.strands, tuple(TorusBraidFactor(1, r, s) for r, s in spec.pairs))


def tlink_braid(spec: TLinkSpec) -> BraidWord:
    return expand(tlink_factored(spec))


def twisted_torus_factored(spec: TwistedTorusSpec) -> FactoredBraid:
    p, q, r, s = spec.p, spec.q, spec.r, spec.s
    # s < 0: (sigma_{r-1}^-1 ... sigma_1^-1)^{|s| r} is the inverse of B_{1,r}^{|s| r}
    return FactoredBraid(p, (TorusBraidFactor(1, p, q), TorusBraidFactor(1, r, s * r)))


def twisted_torus_braid(spec: TwistedTorusSpec) -> BraidWord:
    return expand(twisted_torus_factored(spec))


def _half_twist_letters(i: int, j: int) -> list[int]:
    # (s_i ... s_{j-1})(s_i ... s_{j-2}) ... (s_i); empty when i == j
    out: list[int] = []
    for top in range(j - 1, i - 1, -1):
        out.extend(range(i, top + 1))
    return out


def _negative_half_twist_letters(i: int, j: int) -> list[int]:
    # (s_{j-1}^-1 ... s_i^-1)(s_{j-1}^-1 ... s_{i+1}^-1) ... (s_{j-1}^-1)
    out: list[int] = []
    for bottom in range(i, j):
        out.extend(-x for x in range(j - 1, bottom - 1, -1))
    return out


def positive_half_twist(i: int, j: int, strands: int) -> BraidWord:
    _check_window(i, j, strands)
    return BraidWord(strands, tuple(_half_twist_letters(i, j)))


def negative_half_twist(i: int, j: int, strands: int) -> BraidWord:
    _check_window(i, j, strands)
    return BraidWord(strands, tuple(_negative_half_twist_letters(i, j)))


def half_twist_torus_construction(spec: HalfTwistSpec, strands: int) -> BraidWord:
    """Positive half twist on [i,j], negative on [i,j-t], positive on [j-t+1,j].

    Windows of a single strand contribute nothing. The result represents
    ``torus_braid(i, j, t)``.
    """
    i, j, t = spec.i, spec.j, spec.t
    _check_window(i, j, strands)
    letters = (
        _half_twist_letters(i, j)
        + _negative_half_twist_letters(i, j - t)
        + _half_twist_letters(j - t + 1, j)
    )
    return BraidWord(strands, tuple(letters))


def expand(fb: FactoredBraid) -> BraidWord:
    return compose_all([f.word(fb.strands) for f in fb.factors], fb.strands)


def max_full_width_exponent(fb: FactoredBraid) -> int:
    exps = [f.r for f in fb.factors if f.i == 1 and f.j == fb.strands]
    return max(exps, default=0)


def remove_full_twists(fb: FactoredBraid, k: int) -> FactoredBraid:
    """Drop k full twists from the largest full-width factor.

    Valid because the full twist is central in B_p.
    """
    p = fb.strands
    need = k * p
    best = None
    for idx, f in enumerate(fb.factors):
        if f.i == 1 and f.j == p and f.r >= need and (best is None or f.r > fb.factors[best].r):
            best = idx
    if best is None:
        raise InvalidSpecError(f"no full-width factor with exponent >= {need} on {p} strands")
    f = fb.factors[best]
    new = list(fb.factors)
    new[best] = (f.i, f.j, f.r - need)
    return FactoredBraid(p, tuple(x if isinstance(x, tuple) else (x.i, x.j, x.r) for x in new))


def factor_word(a: BraidWord) -> FactoredBraid | None:
    """Best-effort literal parse of a positive word as consecutive torus-braid factors.

    Tries every rotation and returns the parse with the largest full-width
    exponent. Incomplete: braid-relation variants of a factor are not found.
    """
    if not a.letters or any(e < 0 for e in a.letters):
        return None
    best: FactoredBraid | None = None
    letters = a.letters
    for k in range(len(letters)):
        fb = _literal_factors(letters[k:] + letters[:k], a.strands)
        if best is None or max_full_width_exponent(fb) > max_full_width_exponent(best):
            best = fb
    return best


def _literal_factors(letters: Sequence[int], strands: int) -> FactoredBraid:
    out: list[tuple[int, int, int]] = []
    pos = 0
    L = len(letters)
    while pos < L:
        start = letters[pos]
        end = pos + 1
        while end < L and letters[end] == letters[end - 1] + 1:
            end += 1
        run = tuple(letters[pos:end])
        reps = 1
        while tuple(letters[pos + reps * len(run):pos + (reps + 1) * len(run)]) == run:
            reps += 1
        out.append((start, start + len(run), reps))
        pos += reps * len(run)
    return FactoredBraid(strands, tuple(out))
