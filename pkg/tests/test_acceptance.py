"""Acceptance suite: ten exact checks, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines inline, or
``python tests/test_acceptance.py`` for the summary alone.
"""

from __future__ import annotations

import math
import random
import sys
import time

import pytest

from braidforge.braid import BraidWord, closure_component_count, compose, inverse
from braidforge.burau import alexander, torus_alexander
from braidforge.classifier import Justification, Kind, classify_tlink, classify_twisted_torus, criterion_for_twisted_torus
from braidforge.config import Caps
from braidforge.errors import NotAKnotError
from braidforge.families import (
    HalfTwistSpec,
    TLinkSpec,
    TwistedTorusSpec,
    half_twist_torus_construction,
    tlink_braid,
    torus_braid,
    twisted_torus_braid,
)
from braidforge.hecke import homfly
from braidforge.invariants import bennequin_genus, braid_index_bounds, torus_knot_match
from braidforge.markov import cycle_shift, stabilize
from braidforge.report import full_report
from braidforge.skein import homfly_skein_oracle
from braidforge.wordproblem import braid_equal, is_trivial

SEED = 1729


def _random_word(rng: random.Random, max_strands: int, max_len: int) -> BraidWord:
    n = rng.randint(2, max_strands)
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(0, max_len))))


def _coprime_below(p: int, lo: int):
    return [q for q in range(lo, p) if math.gcd(p, q) == 1]


def positive_ttk_specs():
    return [
        TwistedTorusSpec(p, k * p + q, r, 1)
        for p in range(3, 7)
        for q in _coprime_below(p, 2)
        for r in range(2, q + 1)
        for k in (2, 3)
    ]


def tlink_points():
    return [
        TLinkSpec(((r1, s1), last))
        for p in range(2, 7)
        for q in _coprime_below(p, 1)
        for r1 in range(2, q + 1)
        for s1 in range(1, 4)
        for last in ((p, 2 * p + q), (2 * p + q, p))
    ]


def negative_ttk_specs():
    return [
        TwistedTorusSpec(p, 3 * p + q, r, -1)
        for p in range(3, 7)
        for q in _coprime_below(p, 1)
        for r in range(2, p - q + 1)
    ]


def criterion_1():
    bad, count = [], 0
    for j in range(2, 9):
        for i in range(1, j):
            for t in range(1, j - i + 1):
                count += 1
                built = half_twist_torus_construction(HalfTwistSpec(i, j, t), 8)
                if not braid_equal(built, torus_braid(i, j, t, 8)):
                    bad.append((i, j, t))
    return not bad, f"{count} (i,j,t) windows on 8 strands, mismatches {bad}"


def criterion_2():
    rng = random.Random(SEED)
    bad = []
    for _ in range(200):
        w = _random_word(rng, 4, 10)
        if homfly(w) != homfly_skein_oracle(w):
            bad.append(str(w))
    caps = Caps(skein_crossings=4 * 7)
    torus = 0
    for p in range(2, 5):
        for q in range(1, 8):
            w = torus_braid(1, p, q, p)
            torus += 1
            if homfly(w, caps) != homfly_skein_oracle(w, caps):
                bad.append(f"torus({p},{q})")
    return not bad, f"200 random + {torus} torus braids (skein cap raised to {caps.skein_crossings}), mismatches {bad}"


def criterion_3():
    bad, count = [], 0
    for p in range(3, 6):
        for qp in _coprime_below(p, 2):
            for k in (1, 2):
                count += 1
                b = braid_index_bounds(torus_braid(1, p, qp + k * p, p))
                if (b.lower, b.upper) != (p, p):
                    bad.append((p, qp, k, b.lower, b.upper))
    return not bad, f"{count} torus braids certified index p, failures {bad}"


def criterion_4():
    bad, specs = [], positive_ttk_specs()
    for spec in specs:
        v = classify_twisted_torus(spec)
        rep, t1 = criterion_for_twisted_torus(spec)
        q = spec.q % spec.p
        b = t1.detwisted_bounds
        ok = (
            (v.kind, v.justification) == (Kind.HYPERBOLIC, Justification.POSITIVE_TWISTED_TORUS)
            and t1.kind == Kind.HYPERBOLIC
            and rep.all_hold
            and b is not None
            and b.lower == b.upper == q
        )
        if not ok:
            bad.append(str(spec))
    return not bad, f"{len(specs)} specs Hyperbolic by corollary and criterion, de-twisted index = q; failures {bad}"


def criterion_5():
    bad, knots, links = [], 0, 0
    for spec in tlink_points():
        if closure_component_count(tlink_braid(spec)) != 1:
            # the corollary concerns T-knots; links must be refused, not classified
            links += 1
            try:
                classify_tlink(spec)
                bad.append(f"{spec} (link accepted)")
            except NotAKnotError:
                pass
            continue
        knots += 1
        v = classify_tlink(spec)
        if (v.kind, v.justification) != (Kind.HYPERBOLIC, Justification.T_KNOTS):
            bad.append(str(spec))
    return not bad and knots > 0, f"{knots} T-knots Hyperbolic(Cor1.2), {links} link closures refused; failures {bad}"


def criterion_6():
    bad, specs = [], negative_ttk_specs()
    for spec in specs:
        rep = full_report(spec)
        inv = rep["invariants"]
        ok = (
            (rep["verdict"]["kind"], rep["verdict"]["justification"]) == ("Hyperbolic", "Cor1.4")
            and "errors" not in rep
            and inv["homfly"] is not None
            and inv["alexander"] is not None
            and inv["braid_index"] is not None
        )
        if not ok:
            bad.append(str(spec))
    return not bad, f"{len(specs)} specs Hyperbolic(Cor1.4) with HOMFLY, Alexander, index computed; failures {bad}"


def criterion_7():
    bad, hyperbolic = [], 0
    braids = [twisted_torus_braid(s) for s in positive_ttk_specs() + negative_ttk_specs()]
    braids += [tlink_braid(s) for s in tlink_points() if closure_component_count(tlink_braid(s)) == 1]
    for w in braids:
        hyperbolic += 1
        if torus_knot_match(w) is not None:
            bad.append(str(w)[:40])
    control = 0
    for p in range(2, 8):
        for q in range(2, 8):
            if p == q or math.gcd(p, q) != 1:
                continue
            control += 1
            if torus_knot_match(torus_braid(1, p, q, p)) != (min(p, q), max(p, q)):
                bad.append(f"T({p},{q}) unmatched")
    return not bad, f"{hyperbolic} Hyperbolic closures unmatched, {control} torus controls matched; failures {bad}"


def criterion_8():
    bad, count = [], 0
    for p in range(2, 8):
        for q in range(2, 8):
            if p == q or math.gcd(p, q) != 1:
                continue
            count += 1
            w = torus_braid(1, p, q, p)
            if alexander(w) != torus_alexander(p, q) or bennequin_genus(w) != (p - 1) * (q - 1) // 2:
                bad.append((p, q))
    return not bad, f"{count} coprime torus knots, failures {bad}"


def criterion_9():
    rng = random.Random(SEED + 9)
    bad, knots = [], 0
    for _ in range(200):
        w = _random_word(rng, 4, 10)
        if not w.letters:
            w = BraidWord(w.strands, (1,))
        moved = [cycle_shift(w), stabilize(w, 1), stabilize(w, -1)]
        P = homfly(w)
        if any(homfly(m) != P for m in moved):
            bad.append(f"homfly {w}")
        if closure_component_count(w) == 1:
            knots += 1
            D = alexander(w)
            if any(alexander(m) != D for m in moved):
                bad.append(f"alexander {w}")
    return not bad, f"200 words ({knots} knots) under cycle shift and both stabilizations, failures {bad}"


def criterion_10():
    rng = random.Random(SEED + 10)
    bad = []
    for _ in range(500):
        w = _random_word(rng, 6, 20)
        if not is_trivial(compose(w, inverse(w))):
            bad.append(f"inverse {w}")
        n = w.strands
        pos = rng.randint(0, len(w.letters))
        i = rng.randint(1, n - 1)
        far = [x for x in range(1, n) if abs(x - i) >= 2]
        if i <= n - 2:
            ins = (i, i + 1, i, -(i + 1), -i, -(i + 1))
        else:
            ins = (i, -i)
        v = BraidWord(n, w.letters[:pos] + ins + w.letters[pos:])
        if not braid_equal(v, w):
            bad.append(f"relator insertion {w}")
        if far:
            j = rng.choice(far)
            u = BraidWord(n, w.letters[:pos] + (i, j) + w.letters[pos:])
            u2 = BraidWord(n, w.letters[:pos] + (j, i) + w.letters[pos:])
            if not braid_equal(u, u2):
                bad.append(f"far commutation {w}")
    return not bad, f"500 words w*w^-1 trivial, relator and commutation insertions equal; failures {bad[:5]}"


CRITERIA = {
    1: ("half-twist construction equals torus braid", criterion_1),
    2: ("Hecke HOMFLY equals skein HOMFLY", criterion_2),
    3: ("Franks-Williams sharpness on torus braids", criterion_3),
    4: ("positive twisted torus sweep, both paths", criterion_4),
    5: ("T-knot sweep", criterion_5),
    6: ("negative twisted torus sweep", criterion_6),
    7: ("torus-knot exclusion evidence", criterion_7),
    8: ("Alexander and genus of torus knots", criterion_8),
    9: ("Markov invariance", criterion_9),
    10: ("word problem sanity", criterion_10),
}


def run_criterion(number: int) -> tuple[bool, str]:
    title, fn = CRITERIA[number]
    start = time.perf_counter()
    ok, detail = fn()
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:2d} [{title}] {time.perf_counter() - start:.1f}s: {detail}"
    return ok, line


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_acceptance(number, capsys):
    ok, line = run_criterion(number)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
