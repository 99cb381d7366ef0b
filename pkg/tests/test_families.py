import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidforge.braid import BraidWord, closure_component_count, compose, inverse
from braidforge.errors import InvalidSpecError
from braidforge.families import (
    FactoredBraid,
    HalfTwistSpec,
    TLinkSpec,
    TorusBraidFactor,
    TwistedTorusSpec,
    expand,
    factor_word,
    full_twist,
    half_twist_torus_construction,
    max_full_width_exponent,
    negative_half_twist,
    positive_half_twist,
    remove_full_twists,
    tlink_braid,
    torus_braid,
    twisted_torus_braid,
)
from braidforge.wordproblem import braid_equal, is_trivial

from .conftest import braid_words


def W(n, *letters):
    return BraidWord(n, tuple(letters))


def test_torus_braid_examples():
    assert torus_braid(1, 3, 2, 3) == W(3, 1, 2, 1, 2)
    assert torus_braid(2, 4, 1, 5) == W(5, 2, 3)
    assert torus_braid(1, 2, 0, 2) == W(2)
    with pytest.raises(InvalidSpecError):
        torus_braid(2, 2, 1, 3)


def test_full_twist_examples():
    assert full_twist(2, 1) == W(2, 1, 1)
    assert full_twist(3, 1) == W(3, 1, 2, 1, 2, 1, 2)
    assert full_twist(3, 2) == torus_braid(1, 3, 6, 3)


def test_tlink_examples():
    assert tlink_braid(TLinkSpec(((2, 3),))) == W(2, 1, 1, 1)
    assert tlink_braid(TLinkSpec(((2, 2), (3, 8)))) == W(3, 1, 1, *([1, 2] * 8))
    assert tlink_braid(TLinkSpec(((2, 1),))) == W(2, 1)


@pytest.mark.parametrize("pairs", [((3, 1), (2, 1)), ((2, 0),), ((1, 2),), ()])
def test_tlink_validation(pairs):
    with pytest.raises(InvalidSpecError):
        TLinkSpec(pairs)


def test_twisted_torus_examples():
    assert twisted_torus_braid(TwistedTorusSpec(3, 8, 2, 1)) == W(3, *([1, 2] * 8), 1, 1)
    assert twisted_torus_braid(TwistedTorusSpec(5, 16, 2, -1)) == W(5, *([1, 2, 3, 4] * 16), -1, -1)
    with pytest.raises(InvalidSpecError):
        TwistedTorusSpec(3, 2, 2, 0)
    with pytest.raises(InvalidSpecError):
        TwistedTorusSpec(3, 2, 3, 1)


def test_half_twist_words():
    assert positive_half_twist(1, 3, 3) == W(3, 1, 2, 1)
    assert positive_half_twist(1, 2, 2) == W(2, 1)
    assert positive_half_twist(2, 4, 4) == W(4, 2, 3, 2)
    assert negative_half_twist(1, 2, 2) == W(2, -1)
    assert negative_half_twist(1, 3, 3) == W(3, -2, -1, -2)
    assert is_trivial(compose(positive_half_twist(1, 3, 3), negative_half_twist(1, 3, 3)))


@pytest.mark.parametrize("i, j, t", [(1, 7, 4), (1, 2, 1), (1, 4, 2), (2, 6, 3)])
def test_half_twist_construction_examples(i, j, t):
    n = max(j, 2)
    assert braid_equal(half_twist_torus_construction(HalfTwistSpec(i, j, t), n), torus_braid(i, j, t, n))


def test_half_twist_spec_bounds():
    with pytest.raises(InvalidSpecError):
        HalfTwistSpec(1, 3, 3)
    with pytest.raises(InvalidSpecError):
        HalfTwistSpec(1, 3, 0)


@pytest.mark.parametrize("i, j", [(1, 2), (1, 3), (2, 5), (1, 5)])
def test_half_twist_squares_to_full_twist(i, j):
    h = positive_half_twist(i, j, j)
    assert braid_equal(compose(h, h), torus_braid(i, j, j - i + 1, j))


def test_expand_examples():
    fb = FactoredBraid(3, ((1, 3, 8), (1, 2, 2)))
    assert expand(fb) == twisted_torus_braid(TwistedTorusSpec(3, 8, 2, 1))
    assert expand(FactoredBraid(4, ())) == W(4)
    assert expand(FactoredBraid(3, ((1, 3, 2), (1, 3, 3)))) == torus_braid(1, 3, 5, 3)


def test_factored_braid_normalization():
    fb = FactoredBraid(3, ((1, 3, 2), (1, 3, 3), (1, 2, 0)))
    assert fb.factors == (TorusBraidFactor(1, 3, 5),)
    assert str(fb) == "FB@3[(1,3,5)]"
    with pytest.raises(InvalidSpecError):
        FactoredBraid(3, ((1, 4, 1),))


def test_negative_factor_expands_to_inverse():
    assert TorusBraidFactor(1, 3, -2).word(3) == inverse(torus_braid(1, 3, 2, 3))


def test_remove_full_twists_examples():
    assert remove_full_twists(FactoredBraid(3, ((1, 3, 8), (1, 2, 2))), 2) == FactoredBraid(3, ((1, 3, 2), (1, 2, 2)))
    assert remove_full_twists(FactoredBraid(3, ((1, 3, 6),)), 2) == FactoredBraid(3, ())
    with pytest.raises(InvalidSpecError):
        remove_full_twists(FactoredBraid(3, ((1, 3, 2),)), 1)


def test_max_full_width_exponent_examples():
    assert max_full_width_exponent(FactoredBraid(3, ((1, 3, 8), (1, 2, 2)))) == 8
    assert max_full_width_exponent(FactoredBraid(3, ((1, 2, 2),))) == 0
    assert max_full_width_exponent(FactoredBraid(3, ((1, 3, 2), (1, 3, 3)))) == 5


def test_factor_word_finds_literal_factors():
    word = twisted_torus_braid(TwistedTorusSpec(3, 8, 2, 1))
    fb = factor_word(word)
    assert fb is not None and max_full_width_exponent(fb) == 8
    assert factor_word(W(3, 1, -2)) is None


@pytest.mark.parametrize("p, q", [(2, 3), (3, 6), (4, 6), (5, 5), (3, 7)])
def test_single_pair_tlink_components(p, q):
    import math

    assert closure_component_count(tlink_braid(TLinkSpec(((p, q),)))) == math.gcd(p, q)


@given(braid_words(max_strands=5, max_len=8), st.integers(2, 5), st.integers(1, 2))
def test_full_twist_is_central(w, n, k):
    n = min(n, w.strands) if w.strands >= 2 else 2
    w = BraidWord(n, tuple(e for e in w.letters if abs(e) < n))
    d = full_twist(n, k)
    assert braid_equal(compose(d, w), compose(w, d))


@pytest.mark.parametrize("p, k", list(itertools.product(range(2, 6), (1, 2))))
def test_remove_full_twists_is_equivalent(p, k):
    fb = FactoredBraid(p, ((1, p, k * p + 1), (1, 2, 1)))
    stripped = remove_full_twists(fb, k)
    assert braid_equal(expand(fb), compose(full_twist(p, k), expand(stripped)))
