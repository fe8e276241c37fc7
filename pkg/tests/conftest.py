import pytest
from hypothesis import strategies as st

from monideal.core import minimalize
from monideal.corpus import random_ideals, squarefree_ideals


def small_ideals(n_max=3, e_max=3, g_max=4, nonzero=True, proper=True):
    """Hypothesis strategy: monomial ideals with few small generators."""

    @st.composite
    def build(draw):
        n = draw(st.integers(1, n_max))
        vec = st.tuples(*[st.integers(0, e_max)] * n)
        gens = draw(st.lists(vec, min_size=1 if nonzero else 0, max_size=g_max))
        if proper:
            gens = [g for g in gens if any(g)] or [tuple([1] + [0] * (n - 1))]
        return minimalize(gens, n)

    return build()


def random_ideal_corpus(count, n_max=3, e_max=3, g_max=4, seed=0):
    return random_ideals(count, n_max, e_max, g_max, seed)


@pytest.fixture(scope="session")
def squarefree_corpus():
    return [I for n in range(1, 5) for I in squarefree_ideals(n)]
