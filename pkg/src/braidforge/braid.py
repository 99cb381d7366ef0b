"""Braid words in the Artin generators, their permutations, and the text format.

A letter ``e > 0`` stands for sigma_e and ``e < 0`` for sigma_{|e|}^{-1}.
Braid words are immutable values; every operation returns a new word.
"""

from __future__ import annotations

import dataclasses
import re
from typing import Iterable, Sequence

from .errors import ParseError, StrandMismatchError


@dataclasses.dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(e) for e in self.letters)
        object.__setattr__(self, "letters", letters)
        if self.strands < 1:
            raise ValueError(f"strand count must be positive, got {self.strands}")
        for e in letters:
            if e == 0 or abs(e) >= self.strands:
                raise ValueError(f"letter {e} is not a generator of B_{self.strands}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)

    def __str__(self) -> str:
        return format_braid(self)

    @classmethod
    def identity(cls, strands: int) -> "BraidWord":
        return cls(strands, ())


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[k-1]`` is the image of k."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(k) = self(other(k))
        return Permutation(tuple(self.images[other.images[k] - 1] for k in range(len(self.images))))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = []
            k = start
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = self(k)
            out.append(tuple(cyc))
        return out

    def is_identity(self) -> bool:
        return all(v == k + 1 for k, v in enumerate(self.images))


def _check_same(a: BraidWord, b: BraidWord) -> None:
    if a.strands != b.strands:
        raise StrandMismatchError(f"strand counts differ: {a.strands} vs {b.strands}")


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    _check_same(a, b)
    return BraidWord(a.strands, a.letters + b.letters)


def compose_all(words: Sequence[BraidWord], strands: int | None = None) -> BraidWord:
    if not words:
        if strands is None:
            raise ValueError("need a strand count for an empty product")
        return BraidWord(strands)
    n = words[0].strands if strands is None else strands
    letters: list[int] = []
    for w in words:
        if w.strands != n:
            raise StrandMismatchError(f"strand counts differ: {n} vs {w.strands}")
        letters.extend(w.letters)
    return BraidWord(n, tuple(letters))


def inverse(a: BraidWord) -> BraidWord:
    return BraidWord(a.strands, tuple(-e for e in reversed(a.letters)))


def _free_reduce_letters(letters: Iterable[int]) -> list[int]:
    stack: list[int] = []
    for e in letters:
        if stack and stack[-1] == -e:
            stack.pop()
        else:
            stack.append(e)
    return stack


def free_reduce(a: BraidWord) -> BraidWord:
    return BraidWord(a.strands, tuple(_free_reduce_letters(a.letters)))


def cyclic_free_reduce(a: BraidWord) -> BraidWord:
    """Free reduction followed by cancelling inverse letters across the wrap-around (a conjugation)."""
    w = _free_reduce_letters(a.letters)
    lo, hi = 0, len(w)
    while hi - lo >= 2 and w[lo] == -w[hi - 1]:
        lo += 1
        hi -= 1
    return BraidWord(a.strands, tuple(w[lo:hi]))


def permutation(a: BraidWord) -> Permutation:
    """Image in S_n: the product of transpositions (|e| |e|+1), leftmost letter outermost."""
    images = list(range(1, a.strands + 1))
    # images[k] = t_{e1}(t_{e2}(...t_{ek}(k))): apply letters right to left
    for e in reversed(a.letters):
        i = abs(e)
        for k, v in enumerate(images):
            if v == i:
                images[k] = i + 1
            elif v == i + 1:
                images[k] = i
    return Permutation(tuple(images))


def closure_component_count(a: BraidWord) -> int:
    return len(permutation(a).cycles())


def closure_is_knot(a: BraidWord) -> bool:
    return closure_component_count(a) == 1


def exponent_sum(a: BraidWord) -> int:
    return sum(1 if e > 0 else -1 for e in a.letters)


def is_positive(a: BraidWord) -> bool:
    return all(e > 0 for e in a.letters)


def flip(a: BraidWord) -> BraidWord:
    """Conjugate by the half twist: sigma_i -> sigma_{n-i}. Preserves the closure."""
    n = a.strands
    return BraidWord(n, tuple((n - abs(e)) * (1 if e > 0 else -1) for e in a.letters))


def generator_counts(a: BraidWord) -> list[int]:
    """``counts[i]`` is the number of letters with index i (either sign); index 0 unused."""
    counts = [0] * max(a.strands, 1)
    for e in a.letters:
        counts[abs(e)] += 1
    return counts


# -- text format -------------------------------------------------------------

_BRAID_RE = re.compile(r"n=(\d+):((?: -?\d+)*)")


def format_braid(a: BraidWord) -> str:
    if not a.letters:
        return f"n={a.strands}:"
    return f"n={a.strands}: " + " ".join(str(e) for e in a.letters)


def parse_braid(text: str) -> BraidWord:
    """Parse ``n=<strands>: <e1> <e2> ...``; rejects 0 and letters with |e| >= n."""
    s = text.strip()
    m = _BRAID_RE.fullmatch(s)
    if m is None:
        pos = 0
        if not s.startswith("n="):
            raise ParseError("braid text must start with 'n='", s, 0)
        pos = 2
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if pos == 2:
            raise ParseError("expected strand count", s, pos)
        if pos >= len(s) or s[pos] != ":":
            raise ParseError("expected ':' after strand count", s, pos)
        pos += 1
        while pos < len(s):
            if s[pos] != " ":
                raise ParseError("letters must be separated by single spaces", s, pos)
            pos += 1
            start = pos
            if pos < len(s) and s[pos] == "-":
                pos += 1
            digits = pos
            while pos < len(s) and s[pos].isdigit():
                pos += 1
            if pos == digits:
                raise ParseError("expected a signed integer letter", s, start)
        raise ParseError("malformed braid text", s, len(s))
    n = int(m.group(1))
    if n < 1:
        raise ParseError("strand count must be positive", s, 2)
    letters = []
    pos = m.start(2)
    for tok in m.group(2).split(" ")[1:]:
        pos += 1
        e = int(tok)
        if e == 0:
            raise ParseError("letter 0 is not a generator", s, pos)
        if abs(e) >= n:
            raise ParseError(f"letter {e} out of range for {n} strands", s, pos)
        letters.append(e)
        pos += len(tok)
    return BraidWord(n, tuple(letters))
