import random

import pytest
from hypothesis import strategies as st


def words(rank: int, max_size: int = 16) -> st.SearchStrategy[tuple[int, ...]]:
    letter = st.integers(1, rank).flatmap(lambda i: st.sampled_from((i, -i)))
    return st.lists(letter, max_size=max_size).map(tuple)


@pytest.fixture
def rng():
    return random.Random(20041)
