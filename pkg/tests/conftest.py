import pytest

from radical_lab.catalog import (
    default_catalog,
    module_example_exx,
    ring_matrix,
    ring_upper_triangular,
    ring_Zn,
)
from radical_lab.config import Settings
from radical_lab.core import module_from_action, regular_module


@pytest.fixture(scope="session")
def settings():
    return Settings()


@pytest.fixture(scope="session")
def z2(settings):
    return ring_Zn(2, settings=settings)


@pytest.fixture(scope="session")
def z4(settings):
    return ring_Zn(4, settings=settings)


@pytest.fixture(scope="session")
def z6(settings):
    return ring_Zn(6, settings=settings)


@pytest.fixture(scope="session")
def z8(settings):
    return ring_Zn(8, settings=settings)


@pytest.fixture(scope="session")
def u2(z2, settings):
    return ring_upper_triangular(2, z2, settings=settings)


@pytest.fixture(scope="session")
def exx():
    return module_example_exx()


@pytest.fixture(scope="session")
def m2(exx):
    return exx.ring


@pytest.fixture(scope="session")
def z4_regular(z4):
    return regular_module(z4)


@pytest.fixture(scope="session")
def z6_regular(z6):
    return regular_module(z6)


@pytest.fixture(scope="session")
def zero_module(z2, settings):
    return module_from_action(z2, [[0]], [[0], [0]], label="0", settings=settings)


@pytest.fixture(scope="session")
def catalog(settings):
    return default_catalog(settings)


@pytest.fixture(scope="session")
def m2_matrix(z2, settings):
    return ring_matrix(2, z2, settings=settings)
