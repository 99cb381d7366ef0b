"""Dehornoy handle reduction and the braid word problem.

A sigma_i-handle is a subword ``s_i^e v s_i^-e`` where ``v`` has no letter of
index <= i. Reducing it deletes the two ends and rewrites every
``s_{i+1}^d`` inside ``v`` as ``s_{i+1}^-e s_i^d s_{i+1}^e``. We always reduce
the handle that closes first; such a handle has no handle nested inside it,
so the rewrite is valid, and the process terminates on a handle-free word.
A handle-free word is empty exactly when the braid is trivial.
"""

from __future__ import annotations

from .braid import BraidWord, _check_same, _free_reduce_letters, compose, inverse, permutation
from .config import Caps, default_caps
from .errors import StepBudgetExceeded


def _first_handle(w: list[int], n: int) -> tuple[int, int] | None:
    # last[i]: position of the latest sigma_i letter not shielded by a lower letter
    last: list[int] = [-1] * n
    for k, e in enumerate(w):
        m = e if e > 0 else -e
        j = last[m]
        if j >= 0 and w[j] == -e:
            return j, k
        last[m] = k
        for i in range(m + 1, n):
            last[i] = -1
    return None


def _reduce_handle(w: list[int], j: int, k: int) -> list[int]:
    e = w[j]
    m = e if e > 0 else -e
    sign = 1 if e > 0 else -1
    up = m + 1
    middle: list[int] = []
    for x in w[j + 1:k]:
        if x == up or x == -up:
            d = 1 if x > 0 else -1
            middle.extend((-sign * up, d * m, sign * up))
        else:
            middle.append(x)
    return w[:j] + _free_reduce_letters(middle) + w[k + 1:]


def handle_reduce(a: BraidWord, caps: Caps | None = None, budget: int | None = None) -> BraidWord:
    """Handle-free word equivalent to ``a``; empty iff ``a`` is trivial."""
    if budget is None:
        budget = (caps or default_caps()).handle_budget
    w = _free_reduce_letters(a.letters)
    steps = 0
    while True:
        h = _first_handle(w, a.strands)
        if h is None:
            return BraidWord(a.strands, tuple(w))
        steps += 1
        if steps > budget:
            raise StepBudgetExceeded(f"handle reduction exceeded {budget} steps")
        w = _free_reduce_letters(_reduce_handle(w, *h))


def is_trivial(a: BraidWord, caps: Caps | None = None) -> bool:
    if not permutation(a).is_identity():
        return False
    return len(handle_reduce(a, caps)) == 0


def braid_equal(a: BraidWord, b: BraidWord, caps: Caps | None = None) -> bool:
    _check_same(a, b)
    return is_trivial(compose(a, inverse(b)), caps)


def equality_witness(a: BraidWord, b: BraidWord, caps: Caps | None = None) -> BraidWord:
    """Handle-reduced form of a * b^-1 (empty iff a == b)."""
    _check_same(a, b)
    return handle_reduce(compose(a, inverse(b)), caps)
