import pytest

from qtline import lattice_golden, lattice_sqrt2


@pytest.fixture
def l1():
    """Z + Z*sqrt(2)."""
    return lattice_sqrt2()


@pytest.fixture
def l2():
    """Z + Z*(1+sqrt(5))/2."""
    return lattice_golden()
