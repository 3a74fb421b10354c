import os

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from sphereloop.hilbert import make_rng

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("stress", deadline=None, max_examples=1000,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

coords = st.floats(-1.0, 1.0, allow_nan=False, allow_infinity=False)


def unit_vector(dim: int, margin: float = 1e-3):
    """Unit vectors in R^dim kept ``margin`` away from -e0."""

    def norm(v):
        return v / np.linalg.norm(v)

    e = np.zeros(dim)
    e[0] = 1.0
    return (arrays(np.float64, dim, elements=coords)
            .filter(lambda v: np.linalg.norm(v) > 0.1)
            .map(norm)
            .filter(lambda v: np.linalg.norm(v + e) > margin))


dims = st.integers(2, 7)


def points(n: int, min_dim: int = 2, max_dim: int = 7):
    """Tuples of n unit vectors sharing one random dimension."""
    return st.integers(min_dim, max_dim).flatmap(lambda d: st.tuples(*[unit_vector(d)] * n))


@pytest.fixture
def rng():
    return make_rng(20240611)


# (criterion number, line) pairs filled in by test_acceptance
ACCEPTANCE: list[tuple[int, str]] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
