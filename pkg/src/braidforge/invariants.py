"""Link invariants of braid closures and braid-index bounds.

The braid index is bracketed by the Morton-Franks-Williams lower bound
(a-breadth of HOMFLY-PT / 2 + 1) and the strand count reached by greedy
destabilization. For positive braids with a full twist the lower bound is
sharp (Franks-Williams), which settles the index for every family built here.
"""

from __future__ import annotations

import dataclasses
import math

from .braid import BraidWord, closure_component_count, is_positive
from .burau import alexander, torus_alexander
from .config import Caps, default_caps
from .errors import NotAKnotError
from .families import FactoredBraid, factor_word, max_full_width_exponent, torus_braid
from .hecke import homfly
from .laurent import LaurentPoly2
from .markov import greedy_destabilize
from .skein import homfly_skein_oracle

__all__ = [
    "BraidIndexBounds",
    "alexander",
    "bennequin_genus",
    "braid_index_bounds",
    "franks_williams_index",
    "homfly",
    "homfly_reduced",
    "homfly_skein_oracle",
    "mfw_lower_bound",
    "torus_alexander",
    "torus_knot_match",
]


@dataclasses.dataclass(frozen=True)
class BraidIndexBounds:
    lower: int
    upper: int

    def __post_init__(self):
        if not (1 <= self.lower <= self.upper):
            raise ValueError(f"inconsistent braid index bounds ({self.lower}, {self.upper})")

    @property
    def exact(self) -> int | None:
        return self.lower if self.lower == self.upper else None

    def as_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper}


def bennequin_genus(a: BraidWord) -> int:
    """Seifert genus of a positive braid knot: (crossings - strands + 1) / 2."""
    if not is_positive(a):
        raise ValueError("genus formula needs a positive braid")
    if closure_component_count(a) != 1:
        raise NotAKnotError("genus formula needs a knot closure")
    return (len(a.letters) - a.strands + 1) // 2


def mfw_lower_bound(P: LaurentPoly2) -> int:
    if P.is_zero():
        raise ValueError("zero polynomial is not a HOMFLY-PT polynomial")
    return P.a_breadth() // 2 + 1


def homfly_reduced(a: BraidWord, caps: Caps | None = None) -> LaurentPoly2:
    """HOMFLY-PT evaluated on a destabilized presentation of the same link (fewer strands, cheaper)."""
    return homfly(greedy_destabilize(a), caps)


def braid_index_bounds(a: BraidWord, caps: Caps | None = None) -> BraidIndexBounds:
    reduced = greedy_destabilize(a)
    lower = mfw_lower_bound(homfly(reduced, caps))
    return BraidIndexBounds(lower, reduced.strands)


def franks_williams_index(a: BraidWord | FactoredBraid) -> int | None:
    """Strand count when ``a`` is positive and contains a full twist on all strands.

    Factored input is read from its factors; a raw word goes through the
    literal factor detector, which can miss disguised full twists.
    """
    if isinstance(a, FactoredBraid):
        fb = a
        if not fb.is_positive():
            return None
    else:
        if not is_positive(a):
            return None
        if a.strands == 1:
            return 1
        fb = factor_word(a)
        if fb is None:
            return None
    if fb.strands == 1:
        return 1
    return fb.strands if max_full_width_exponent(fb) >= fb.strands else None


def _torus_candidates(genus: int):
    two_g = 2 * genus
    for d in range(1, two_g + 1):
        if two_g % d:
            continue
        p, q = d + 1, two_g // d + 1
        if p < q and math.gcd(p, q) == 1:
            yield p, q


def torus_knot_match(a: BraidWord, caps: Caps | None = None) -> tuple[int, int] | None:
    """A positive torus knot T(p, q) sharing both Alexander and HOMFLY-PT with the closure, or None.

    Evidence, not proof: candidates are limited to the genus read off the
    braid (Bennequin for positive words, HOMFLY z-degree otherwise).
    """
    caps = caps or default_caps()
    if closure_component_count(a) != 1:
        raise NotAKnotError("torus knot matching needs a knot closure")
    P = None
    if is_positive(a):
        genus = bennequin_genus(a)
    else:
        P = homfly_reduced(a, caps)
        genus = P.z_degrees()[1] // 2
    if genus == 0:
        return None
    delta = alexander(a)
    for p, q in _torus_candidates(genus):
        if torus_alexander(p, q) != delta:
            continue
        if P is None:
            P = homfly_reduced(a, caps)
        if homfly(torus_braid(1, p, q, p), caps) == P:
            return p, q
    return None
