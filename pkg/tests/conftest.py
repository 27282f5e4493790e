import pytest

from qlattice.rng import Xorshift64Star
from qlattice.tolerances import Tolerance


@pytest.fixture
def tol():
    return Tolerance()


@pytest.fixture
def rng():
    return Xorshift64Star(20240817)
