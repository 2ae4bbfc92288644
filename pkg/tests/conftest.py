import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from lipfree.deleeuw import measure
from lipfree.free_element import LipschitzFunction, from_weights
from lipfree.metric_space import build, line_space, random_space


@pytest.fixture
def line4():
    """The points 0, 1, 2, 3 of the real line, based at 0."""
    return line_space([0, 1, 2, 3])


@pytest.fixture
def triangle():
    """Equilateral triangle {0, a, b} with unit sides."""
    one = Fraction(1)
    return build(["0", "a", "b"], [[0, one, one], [one, 0, one], [one, one, 0]], 0)


@pytest.fixture
def two_points():
    return build(["0", "a"], [[0, 1], [1, 0]], 0)


@st.composite
def spaces(draw, min_n=2, max_n=6):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 10**6))
    return random_space(n, seed)


def random_element(space, rng, density=0.7):
    return from_weights(
        space,
        {x: Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for x in range(space.n) if rng.random() < density},
    )


def random_function(space, rng):
    vals = [Fraction(rng.randint(-8, 8), rng.randint(1, 3)) for _ in range(space.n)]
    vals[space.base] = Fraction(0)
    return LipschitzFunction(space, vals)


def random_measure(space, rng, atoms=None):
    pairs = space.ordered_pairs()
    k = atoms if atoms is not None else rng.randint(0, min(8, len(pairs)))
    return measure(
        space, [(rng.choice(pairs), Fraction(rng.randint(-5, 5), rng.randint(1, 3))) for _ in range(k)]
    )


@st.composite
def space_and_rng(draw, min_n=2, max_n=6):
    sp = draw(spaces(min_n, max_n))
    return sp, random.Random(draw(st.integers(0, 2**32)))
