"""Independent HOMFLY-PT oracle: skein-tree resolution of the closed braid diagram.

Uses only the skein relation a P(L+) - a^-1 P(L-) = z P(L0), the unlink
value delta^(c-1), split unions, and Markov destabilization. Each diagram is
driven to a descending diagram (every crossing first met as an over-crossing
along a fixed traversal), which is an unlink; every switch spawns a smoothed
diagram with one crossing fewer. No Hecke algebra is involved.
"""

from __future__ import annotations

import functools

from .braid import BraidWord, _free_reduce_letters
from .config import Caps, default_caps
from .errors import ResourceCapExceeded
from .laurent import DELTA, ONE, LaurentPoly2

_A2 = LaurentPoly2.monomial(2, 0)
_AM2 = LaurentPoly2.monomial(-2, 0)
_AM1Z = LaurentPoly2.monomial(-1, 1)
_NEG_AZ = LaurentPoly2.monomial(1, 1, -1)


def _cyclic_reduce(w: list[int]) -> list[int]:
    w = _free_reduce_letters(w)
    lo, hi = 0, len(w)
    while hi - lo >= 2 and w[lo] == -w[hi - 1]:
        lo += 1
        hi -= 1
    return w[lo:hi]


def _canonical(w: list[int]) -> tuple[int, ...]:
    if not w:
        return ()
    return min(tuple(w[k:] + w[:k]) for k in range(len(w)))


def _traverse(n: int, w: tuple[int, ...]) -> tuple[list[int], int]:
    """Crossings whose first visit is an under-crossing, in visiting order, and the component count.

    At a positive letter the strand moving left (from i+1 to i) passes over.
    """
    first_over: dict[int, bool] = {}
    order: list[int] = []
    done = [False] * (n + 1)
    components = 0
    for start in range(1, n + 1):
        if done[start]:
            continue
        components += 1
        pos = start
        while True:
            done[pos] = True
            for t, e in enumerate(w):
                i = e if e > 0 else -e
                if pos == i:
                    moving_left = False
                    pos = i + 1
                elif pos == i + 1:
                    moving_left = True
                    pos = i
                else:
                    continue
                if t not in first_over:
                    first_over[t] = moving_left == (e > 0)
                    order.append(t)
            if pos == start:
                break
    bad = [t for t in order if not first_over[t]]
    return bad, components


@functools.lru_cache(maxsize=1 << 16)
def _skein(n: int, w: tuple[int, ...]) -> LaurentPoly2:
    if n == 1:
        return ONE
    counts = [0] * n
    for e in w:
        counts[abs(e)] += 1
    # split union at an unused generator
    for i in range(1, n):
        if counts[i] == 0:
            left = [e for e in w if abs(e) < i]
            right = [(abs(e) - i) * (1 if e > 0 else -1) for e in w if abs(e) > i]
            return DELTA * _reduced(i, left) * _reduced(n - i, right)
    if counts[n - 1] == 1:
        return _reduced(n - 1, [e for e in w if abs(e) != n - 1])
    if counts[1] == 1:
        return _reduced(n - 1, [(abs(e) - 1) * (1 if e > 0 else -1) for e in w if abs(e) != 1])
    bad, components = _traverse(n, w)
    cur = list(w)
    total = LaurentPoly2()
    mult = ONE
    for t in bad:
        smoothed = cur[:t] + cur[t + 1:]
        if cur[t] > 0:
            # P(L+) = a^-2 P(L-) + a^-1 z P(L0)
            total = total + mult * _AM1Z * _reduced(n, smoothed)
            mult = mult * _AM2
        else:
            # P(L-) = a^2 P(L+) - a z P(L0)
            total = total + mult * _NEG_AZ * _reduced(n, smoothed)
            mult = mult * _A2
        cur[t] = -cur[t]
    return total + mult * DELTA ** (components - 1)


def _reduced(n: int, w: list[int]) -> LaurentPoly2:
    return _skein(n, _canonical(_cyclic_reduce(w)))


def homfly_skein_oracle(a: BraidWord, caps: Caps | None = None) -> LaurentPoly2:
    caps = caps or default_caps()
    if len(a.letters) > caps.skein_crossings:
        raise ResourceCapExceeded(
            f"skein oracle limited to {caps.skein_crossings} crossings, word has {len(a.letters)}"
        )
    return _reduced(a.strands, list(a.letters))
