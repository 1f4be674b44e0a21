import pytest
import numpy as np

from moore_utils.cantor import cantor_space


@pytest.fixture
def rng():
    return np.random.default_rng(1729)


@pytest.fixture
def X():
    return cantor_space()
