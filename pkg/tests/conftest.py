import pytest

from gsrs.field import build_field


@pytest.fixture(scope="session")
def gf5():
    return build_field(5)


@pytest.fixture(scope="session")
def gf7():
    return build_field(7)


@pytest.fixture(scope="session")
def gf16():
    return build_field(2, 4, (1, 1, 0, 0, 1))
