import pytest

from modinv import builtin_e6_double, builtin_su2, enumerate_invariants, verlinde


@pytest.fixture(scope="session")
def e6():
    return builtin_e6_double()


@pytest.fixture(scope="session")
def e6_fusion(e6):
    return verlinde(e6)


@pytest.fixture(scope="session")
def e6_invariants(e6):
    return enumerate_invariants(e6)


@pytest.fixture(scope="session")
def su2_16():
    return builtin_su2(16)


@pytest.fixture(scope="session")
def su2_16_invariants(su2_16):
    return enumerate_invariants(su2_16)
