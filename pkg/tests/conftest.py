import math
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from quiverflow import Representation, canonical_central, fixture  # noqa: E402

SQRT2 = math.sqrt(2.0)


@pytest.fixture
def jordan():
    return fixture("jordan")


@pytest.fixture
def a1():
    return fixture("a1")


def x_min(Q):
    """Minimiser on (1,1) for the canonical element: abar = sqrt 2, rest 0."""
    return Representation(Q, (1, 1), {"abar": [[SQRT2]]})


@pytest.fixture
def jordan_min(jordan):
    Q, _ = jordan
    return x_min(Q)


@pytest.fixture
def alpha11(jordan):
    Q, _ = jordan
    return canonical_central(Q, (1, 1))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
