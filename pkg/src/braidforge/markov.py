"""Markov moves on braid words and a greedy destabilizer.

Conjugation (type I) and stabilization (type II) connect every pair of
braids with isotopic closures. ``greedy_destabilize`` only ever applies moves
that preserve the closure, so the strand count of its output is an upper
bound for the braid index.
"""

from __future__ import annotations

from collections import deque

from .braid import BraidWord, cyclic_free_reduce, flip

# Breadth-first fallback: states explored before giving up on a strand.
SEARCH_LIMIT = 4000


def cycle_shift(a: BraidWord) -> BraidWord:
    """Move the first letter to the end (conjugation)."""
    if not a.letters:
        raise ValueError("cannot cycle-shift the empty word")
    return BraidWord(a.strands, a.letters[1:] + a.letters[:1])


def rotate(a: BraidWord, k: int) -> BraidWord:
    if not a.letters:
        return a
    k %= len(a.letters)
    return BraidWord(a.strands, a.letters[k:] + a.letters[:k])


def stabilize(a: BraidWord, sign: int = 1) -> BraidWord:
    """Add a strand and append sigma_n^{+-1}."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    n = a.strands
    return BraidWord(n + 1, a.letters + (sign * n,))


def destabilize(a: BraidWord) -> BraidWord | None:
    """Delete the unique letter of index n-1 (either sign), or return None."""
    top = a.strands - 1
    if top < 1:
        return None
    hits = [k for k, e in enumerate(a.letters) if abs(e) == top]
    if len(hits) != 1:
        return None
    k = hits[0]
    # w = A s B is conjugate to B A s; deleting s in place gives A B, conjugate to B A
    return BraidWord(a.strands - 1, a.letters[:k] + a.letters[k + 1:])


def _rewrite_pair(w: list[int], i: int, j: int, level: int) -> list[int] | None:
    """Try to lower the count of ``level`` letters using the pair at positions i < j.

    Everything strictly between i and j has index < level.
    """
    e = 1 if w[i] > 0 else -1
    f = 1 if w[j] > 0 else -1
    seg = w[i + 1:j]
    below = level - 1
    hits = [k for k, x in enumerate(seg) if abs(x) == below]
    if not hits:
        if f == -e:
            # seg commutes with sigma_level; the two letters cancel
            return w[:i] + seg + w[j + 1:]
        return None
    if len(hits) == 1:
        h = hits[0]
        d = 1 if seg[h] > 0 else -1
        left, right = seg[:h], seg[h + 1:]
        if e == f == d:
            mid = [e * below, e * level, e * below]
        elif f == -e:
            mid = [-e * below, d * level, e * below]
        else:
            return None
        return w[:i] + left + mid + right + w[j + 1:]
    if below < 2:
        return None
    inner = _reduce_linear(seg, below)
    if inner is None:
        return None
    return w[:i + 1] + inner + w[j:]


def _reduce_linear(w: list[int], level: int) -> list[int] | None:
    """Rewrite ``w`` (max index ``level``) to lower a lexicographic count measure."""
    pos = [k for k, x in enumerate(w) if abs(x) == level]
    for a_, b_ in zip(pos, pos[1:]):
        out = _rewrite_pair(w, a_, b_, level)
        if out is not None:
            return out
    return None


def _reduce_top(a: BraidWord) -> BraidWord | None:
    """Lower the number of top-generator letters, searching over all rotations."""
    top = a.strands - 1
    w = list(a.letters)
    pos = [k for k, x in enumerate(w) if abs(x) == top]
    if len(pos) < 2:
        return None
    for start in pos:
        rot = w[start:] + w[:start]
        nxt = next(k for k in range(1, len(rot)) if abs(rot[k]) == top)
        out = _rewrite_pair(rot, 0, nxt, top)
        if out is not None:
            return BraidWord(a.strands, tuple(out))
    return None


def _local_moves(w: tuple[int, ...]):
    """Closure-preserving rewrites that keep the letter multiset size: commutations,
    braid relations, and a one-step rotation."""
    L = len(w)
    for k in range(L - 1):
        x, y = w[k], w[k + 1]
        if abs(abs(x) - abs(y)) >= 2:
            yield w[:k] + (y, x) + w[k + 2:]
    for k in range(L - 2):
        x, y, z = w[k], w[k + 1], w[k + 2]
        if x == z and abs(abs(x) - abs(y)) == 1 and (x > 0) == (y > 0):
            yield w[:k] + (y, x, y) + w[k + 3:]
    if L:
        yield w[1:] + w[:1]


def _search_reduction(a: BraidWord, limit: int) -> BraidWord | None:
    """Breadth-first search for an equivalent word on which a destabilization
    or top-count rewrite applies."""
    start = a.letters
    seen = {start}
    queue = deque([start])
    while queue and len(seen) < limit:
        w = queue.popleft()
        for v in _local_moves(w):
            if v in seen:
                continue
            seen.add(v)
            cand = BraidWord(a.strands, v)
            for trial in (cand, flip(cand)):
                if destabilize(trial) is not None or _reduce_top(trial) is not None:
                    return cand
            queue.append(v)
    return None


def greedy_destabilize(a: BraidWord, search_limit: int = SEARCH_LIMIT) -> BraidWord:
    """Destabilize as far as the available moves allow.

    Moves: cyclic free reduction, destabilization at either end (the far end via
    conjugation by the half twist), rewrites lowering the count of the extreme
    generator, and a bounded search over commutation/braid-relation/rotation
    variants when stuck.
    """
    w = cyclic_free_reduce(a)
    seen = {w}
    while w.strands > 1:
        d = destabilize(w)
        if d is None:
            d = destabilize(flip(w))
            d = None if d is None else flip(d)
        if d is not None:
            w = cyclic_free_reduce(d)
            seen = {w}
            continue
        nxt = None
        for cand in _rewrites(w):
            if cand not in seen:
                nxt = cand
                break
        if nxt is None and search_limit:
            s = _search_reduction(w, search_limit)
            if s is not None and s not in seen:
                nxt = s
        if nxt is None:
            break
        seen.add(nxt)
        w = nxt
    return w


def _rewrites(w: BraidWord):
    r = _reduce_top(w)
    if r is not None:
        yield cyclic_free_reduce(r)
    r = _reduce_top(flip(w))
    if r is not None:
        yield cyclic_free_reduce(flip(r))
