import random

import pytest

from uplab.fields import FieldSpec, make_extension


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


@pytest.fixture(scope="session")
def F2():
    return make_extension(2, 1)


@pytest.fixture(scope="session")
def F3():
    return make_extension(3, 1)


@pytest.fixture(scope="session")
def F4():
    return make_extension(2, 2)


@pytest.fixture(scope="session")
def F5():
    return make_extension(5, 1)


@pytest.fixture(scope="session")
def F16():
    return make_extension(2, 4)


@pytest.fixture(scope="session")
def F101():
    return make_extension(101, 1)


@pytest.fixture(scope="session")
def QQ():
    return FieldSpec.rationals()
