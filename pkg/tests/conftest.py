import pytest

from groupcensus import universe


@pytest.fixture(scope="session")
def universe8():
    return universe(8)


@pytest.fixture(scope="session")
def universe10():
    return universe(10)


@pytest.fixture(scope="session")
def universe12():
    return universe(12)
