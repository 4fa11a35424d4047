import pytest

from semibraces.fixtures import (
    brandt_b2,
    cyclic_group,
    left_zero,
    right_zero,
    s3,
    sym3,
    sym3_twisted_semibrace,
    t3,
    tau,
    trivial_semibrace,
)


@pytest.fixture(scope="session")
def T3():
    return t3()


@pytest.fixture(scope="session")
def S3():
    return s3()


@pytest.fixture(scope="session")
def TAU():
    return tau()


@pytest.fixture(scope="session")
def C2():
    return cyclic_group(2)


@pytest.fixture(scope="session")
def C3():
    return cyclic_group(3)


@pytest.fixture(scope="session")
def C6():
    return cyclic_group(6)


@pytest.fixture(scope="session")
def B2():
    return brandt_b2()


@pytest.fixture(scope="session")
def SYM3():
    return sym3()


@pytest.fixture(scope="session")
def sym3_brace():
    return sym3_twisted_semibrace()
