import math

import numpy as np
import pytest

from toralmix import random_hyperbolic, validate_automorphism

# Closed-form constants for the two pinned examples.
GAMMA = (3 + math.sqrt(5)) / 2  # cat map expanding eigenvalue, root of x^2-3x+1
PLASTIC = float(np.real(np.roots([1, 0, -1, -1])[np.argmax(np.abs(np.roots([1, 0, -1, -1])))]))

CAT = [[2, 1], [1, 1]]
PLASTIC_COMPANION = [[0, 0, 1], [1, 0, 1], [0, 1, 0]]  # companion of x^3 - x - 1
CAT_DIRECT_SUM = [[2, 1, 0, 0], [1, 1, 0, 0], [0, 0, 2, 1], [0, 0, 1, 1]]


@pytest.fixture(scope="session")
def cat():
    return validate_automorphism(CAT)


@pytest.fixture(scope="session")
def plastic():
    return validate_automorphism(PLASTIC_COMPANION)


@pytest.fixture(scope="session")
def cat_sum():
    return validate_automorphism(CAT_DIRECT_SUM)


@pytest.fixture(scope="session")
def corpus100():
    """100 random hyperbolic unimodular matrices with d <= 5 (fixed seed)."""
    rng = np.random.default_rng(20240501)
    out = []
    while len(out) < 100:
        out.append(random_hyperbolic(rng, int(rng.integers(2, 6))))
    return out


@pytest.fixture(scope="session")
def corpus500():
    """500 random hyperbolic unimodular matrices with d <= 6 (fixed seed)."""
    rng = np.random.default_rng(77)
    out = []
    while len(out) < 500:
        out.append(random_hyperbolic(rng, int(rng.integers(2, 7))))
    return out
