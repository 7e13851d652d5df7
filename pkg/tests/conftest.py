import pytest

from zdbkit.gf import get_field


@pytest.fixture(scope="session")
def f256():
    return get_field("f256_paper")


@pytest.fixture(scope="session")
def f16():
    return get_field("f16")


@pytest.fixture(scope="session")
def f64():
    return get_field("f64")


@pytest.fixture(scope="session")
def f9():
    return get_field("f9")


@pytest.fixture(scope="session")
def f27():
    return get_field("f27")


@pytest.fixture(scope="session")
def f81():
    return get_field("f81")


@pytest.fixture(scope="session")
def f25():
    return get_field("f25")
