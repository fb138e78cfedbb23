import numpy as np
import pytest

from oplab.grid import Grid


@pytest.fixture(scope="session")
def grid_fast() -> Grid:
    """Small grid for cheap tests."""
    return Grid(half_width=16.0, count=2**10)


@pytest.fixture(scope="session")
def grid_default() -> Grid:
    """Default laboratory grid."""
    return Grid(half_width=32.0, count=2**14)


@pytest.fixture(scope="session")
def rng() -> np.random.Generator:
    return np.random.default_rng(20260810)
