import pytest

from pinnacles.actions import orbit_partition
from pinnacles.generation import pinnacle_partition


@pytest.fixture(scope="session")
def partitions():
    """Brute-force pinnacle-set partitions of S_n for n = 1, ..., 8."""
    return {n: pinnacle_partition(n) for n in range(1, 9)}


@pytest.fixture(scope="session")
def orbits():
    """Dual orbits of S_n for n = 1, ..., 8."""
    return {n: orbit_partition(n) for n in range(1, 9)}
