"""HOMFLY-PT through the Hecke algebra H_n and the Ocneanu trace.

Convention: a P(L+) - a^-1 P(L-) = z P(L0), P(unknot) = 1.

With F(b) = a^{writhe(b)} P(closure of b) the skein relation becomes
F(x s_i) - F(x s_i^-1) = z F(x), i.e. F factors through H_n with
T_i^2 = z T_i + 1. The trace satisfies tr(h T_{n-1}) = a tr(h) and
tr(h) = delta tr_{n-1}(h) for h in H_{n-1}, delta = (a - a^-1)/z.

Basis elements T_w are keyed by w in one-line notation (a tuple).
Coefficients of Hecke elements only involve z, stored as {z_exp: int}.
"""

from __future__ import annotations

import functools
import threading

from .braid import BraidWord, exponent_sum
from .config import Caps, default_caps
from .errors import ResourceCapExceeded
from .laurent import DELTA, ONE, LaurentPoly2

ZPoly = dict  # {z_exp: coeff}
HeckeElement = dict  # {permutation tuple: ZPoly}


def _add_into(target: ZPoly, src: ZPoly, shift: int = 0) -> None:
    for e, c in src.items():
        k = e + shift
        v = target.get(k, 0) + c
        if v:
            target[k] = v
        else:
            target.pop(k, None)


def mul_generator(h: HeckeElement, i: int) -> HeckeElement:
    """Right multiplication by T_i (1-based), using T_w T_i = T_{ws_i} or z T_w + T_{ws_i}."""
    out: HeckeElement = {}
    for w, c in h.items():
        ws = w[:i - 1] + (w[i], w[i - 1]) + w[i + 1:]
        if w[i - 1] < w[i]:
            _add_into(out.setdefault(ws, {}), c)
        else:
            _add_into(out.setdefault(w, {}), c, 1)
            _add_into(out.setdefault(ws, {}), c)
    return {w: c for w, c in out.items() if c}


def mul_inverse_generator(h: HeckeElement, i: int) -> HeckeElement:
    """Right multiplication by T_i^-1 = T_i - z."""
    out = mul_generator(h, i)
    for w, c in h.items():
        neg = {e + 1: -v for e, v in c.items()}
        _add_into(out.setdefault(w, {}), neg)
    return {w: c for w, c in out.items() if c}


def identity_element(n: int) -> HeckeElement:
    return {tuple(range(1, n + 1)): {0: 1}}


def braid_to_hecke(a: BraidWord) -> HeckeElement:
    h = identity_element(a.strands)
    for e in a.letters:
        h = mul_generator(h, e) if e > 0 else mul_inverse_generator(h, -e)
    return h


def _reduced_word(w: tuple[int, ...]) -> list[int]:
    """Generators s_{i1} ... s_{ik} with w = s_{i1} ... s_{ik} (right action on positions)."""
    cur = list(w)
    word: list[int] = []
    # bubble sort; each swap strips one generator off the right end
    changed = True
    while changed:
        changed = False
        for i in range(len(cur) - 1):
            if cur[i] > cur[i + 1]:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                word.append(i + 1)
                changed = True
    word.reverse()
    return word


_trace_lock = threading.Lock()


@functools.lru_cache(maxsize=None)
def _trace_basis(w: tuple[int, ...]) -> LaurentPoly2:
    n = len(w)
    if n == 1:
        return ONE
    j = w.index(n) + 1
    if j == n:
        return DELTA * _trace_basis(w[:-1])
    # w = x s_{n-1} s_{n-2} ... s_j with x fixing n, lengths adding
    x = w[:j - 1] + w[j:]
    # tr(T_x T_{n-1} Y) = tr(Y T_x T_{n-1}) = a tr_{n-1}(Y T_x), Y = T_{n-2} ... T_j
    h = identity_element(n - 1)
    for g in range(n - 2, j - 1, -1):
        h = mul_generator(h, g)
    for g in _reduced_word(x):
        h = mul_generator(h, g)
    total = LaurentPoly2()
    for u, c in h.items():
        t = _trace_basis(u)
        for ze, cv in c.items():
            total = total + t.shift(0, ze) * cv
    return total.shift(1, 0)


def trace_basis(w: tuple[int, ...]) -> LaurentPoly2:
    # lru_cache is safe under threads; the lock only avoids duplicated work
    with _trace_lock:
        return _trace_basis(tuple(w))


def ocneanu_trace(h: HeckeElement) -> LaurentPoly2:
    total: dict[tuple[int, int], int] = {}
    for w, c in h.items():
        t = trace_basis(w)
        for ze, cv in c.items():
            for (ae, te), tv in t.items():
                key = (ae, te + ze)
                total[key] = total.get(key, 0) + cv * tv
    return LaurentPoly2(total)


def homfly(a: BraidWord, caps: Caps | None = None) -> LaurentPoly2:
    """HOMFLY-PT polynomial of the closure of ``a``."""
    caps = caps or default_caps()
    if a.strands > caps.hecke_strands:
        raise ResourceCapExceeded(
            f"Hecke evaluation needs {a.strands}! basis elements; cap is {caps.hecke_strands} strands"
        )
    return ocneanu_trace(braid_to_hecke(a)).shift(-exponent_sum(a), 0)
