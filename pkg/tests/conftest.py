import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from braidforge.braid import BraidWord

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def braid_words(draw, max_strands: int = 6, max_len: int = 20, min_strands: int = 2) -> BraidWord:
    n = draw(st.integers(min_strands, max_strands))
    letters = draw(
        st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i))), max_size=max_len)
    )
    return BraidWord(n, tuple(letters))


def random_word(rng: random.Random, max_strands: int, max_len: int, min_strands: int = 2) -> BraidWord:
    n = rng.randint(min_strands, max_strands)
    length = rng.randint(0, max_len)
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240601)
