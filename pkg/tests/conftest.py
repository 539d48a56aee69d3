import pytest

from projcodes.field import FieldCtx


@pytest.fixture(scope="session")
def f2():
    return FieldCtx(2)


@pytest.fixture(scope="session")
def f3():
    return FieldCtx(3)


@pytest.fixture(scope="session")
def f4():
    return FieldCtx.from_spec("q=4:1,1,1")


@pytest.fixture(scope="session")
def f5():
    return FieldCtx(5)
