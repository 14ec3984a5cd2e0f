import pytest

from affmonoid.monoid import build

EXAMPLE1 = [(2, 0), (0, 2), (1, 3), (3, 1)]
EXAMPLE2 = [(0, 1), (2, 0), (3, 0), (1, 1)]


@pytest.fixture
def example1():
    return build(EXAMPLE1, "example1")


@pytest.fixture
def example2():
    return build(EXAMPLE2, "example2")


@pytest.fixture
def num23():
    return build([(2,), (3,)], "num23")


@pytest.fixture
def nn2():
    return build([(1, 0), (0, 1)], "nn2")


@pytest.fixture
def halfplane():
    return build([(1, 0), (-1, 0), (0, 1)], "halfplane")
