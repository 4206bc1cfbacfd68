import mpmath
import pytest

from cotanasym import PrecisionContext


@pytest.fixture
def ctx40():
    return PrecisionContext(40)


@pytest.fixture
def ctx50():
    return PrecisionContext(50)


@pytest.fixture
def ctx120():
    return PrecisionContext(120)


def assert_close(a, b, tol, label=""):
    """|a - b| <= tol with a readable failure message."""
    diff = abs(mpmath.mpf(a) - mpmath.mpf(b)) if not isinstance(a, mpmath.mpc) else abs(a - b)
    assert diff <= mpmath.mpf(tol), f"{label}: |{a} - {b}| = {diff} > {tol}"
