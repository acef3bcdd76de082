"""Shared fixtures and the slow / long_run gates

Tests marked slow take minutes and run with --run-slow. Tests marked
long_run take hours or days and run with --run-long. Both are reported as
skipped otherwise.
"""

import numpy as np
import pytest

from quandlepilot.algebra.groups import AbelianGroup2, EndoMatrix
from quandlepilot.algebra.quandles import MagmaTable, affine_quandle
from quandlepilot.shared import load_params


def pytest_addoption(parser):
    parser.addoption('--run-slow', action='store_true', default=False,
        help="run tests marked slow (minutes)")
    parser.addoption('--run-long', action='store_true', default=False,
        help="run tests marked long_run (hours)")

def pytest_collection_modifyitems(config, items):
    skip_slow = pytest.mark.skip(reason="needs --run-slow")
    skip_long = pytest.mark.skip(reason="needs --run-long")
    for item in items:
        if 'slow' in item.keywords and not config.getoption('--run-slow'):
            item.add_marker(skip_slow)
        if 'long_run' in item.keywords and not config.getoption('--run-long'):
            item.add_marker(skip_long)


## Fixtures
@pytest.fixture
def params():
    return load_params.load_defaults()

@pytest.fixture
def z2_2():
    return AbelianGroup2((1, 1))

@pytest.fixture
def psi3(z2_2):
    """The order-3 automorphism of Z_2^2, e1 -> e2 -> e1 + e2"""
    return EndoMatrix(z2_2, [[0, 1], [1, 1]])

@pytest.fixture
def q4(z2_2, psi3):
    """The latin quandle of order 4"""
    return affine_quandle(z2_2, psi3)

@pytest.fixture
def q3():
    """Aff(Z_3, 2): x * y = 2x + 2y mod 3, a latin quandle of odd order"""
    x = np.arange(3)
    return MagmaTable((2 * x[:, None] + 2 * x[None, :]) % 3)

@pytest.fixture
def q1():
    return MagmaTable([[0]])
