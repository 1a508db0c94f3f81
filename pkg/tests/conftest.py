import pytest

from sumdiff.enumeration import count_by_size
from sumdiff.groups import cyclic, cyclic_x_z2, dicyclic, dihedral


@pytest.fixture(scope="session")
def dic8():
    return dicyclic(2)


@pytest.fixture(scope="session")
def dic12():
    return dicyclic(3)


@pytest.fixture(scope="session")
def dih8():
    return dihedral(4)


@pytest.fixture(scope="session")
def dih12():
    return dihedral(6)


@pytest.fixture(scope="session")
def group_pool():
    """A mixed bag of small groups for property tests."""
    return [
        cyclic(7),
        cyclic(12),
        cyclic_x_z2(5),
        cyclic_x_z2(8),
        dihedral(4),
        dihedral(9),
        dicyclic(2),
        dicyclic(5),
    ]


@pytest.fixture(scope="session")
def warm_kernels(dic8):
    # first jitted call loads or builds the numba cache; keep that cost
    # out of the timed acceptance criteria
    count_by_size(dic8, 2)
    return True
