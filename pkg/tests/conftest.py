import random

import pytest

from quadring import make_ring


@pytest.fixture
def zi():
    return make_ring(-1)


@pytest.fixture
def r2():
    return make_ring(2)


@pytest.fixture
def rng():
    return random.Random(20240229)


def random_element(rng, ring, bound=50):
    """Random valid element with half-coordinates bounded by 2*bound."""
    while True:
        u = rng.randint(-2 * bound, 2 * bound)
        v = rng.randint(-2 * bound, 2 * bound)
        if (u - v) % 2:
            continue
        if not ring.is_half_basis and (u % 2 or v % 2):
            continue
        return ring.half(u, v)
