"""Shared fixtures for the cyclic-weights test suite."""

import sys
from pathlib import Path

import pytest

# Make sibling helper modules (oracles.py) importable from any test file.
_HERE = Path(__file__).resolve().parent
if str(_HERE) not in sys.path:
    sys.path.insert(0, str(_HERE))

from cyclic_weights.weights import make_params


@pytest.fixture(scope="session")
def p5f2():
    return make_params(5, 2)


@pytest.fixture(scope="session")
def p5f3():
    return make_params(5, 3)


@pytest.fixture(scope="session")
def p7f3():
    return make_params(7, 3)


@pytest.fixture(scope="session")
def golden_dir():
    return _HERE / "golden"
