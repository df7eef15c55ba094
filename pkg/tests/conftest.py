import pytest

from bottsamelson.compute.rootsys import build_cartan
from bottsamelson.compute.weyl import CoxeterContext
from bottsamelson.model.Field import Field


@pytest.fixture
def a1() -> CoxeterContext:
    return CoxeterContext(build_cartan("A", 1))


@pytest.fixture
def a2() -> CoxeterContext:
    return CoxeterContext(build_cartan("A", 2))


@pytest.fixture
def a3() -> CoxeterContext:
    return CoxeterContext(build_cartan("A", 3))


@pytest.fixture
def affine_a1() -> CoxeterContext:
    return CoxeterContext(build_cartan("A", 1, affine=True))


@pytest.fixture
def q() -> Field:
    return Field(0)


@pytest.fixture
def f5() -> Field:
    return Field(5)
