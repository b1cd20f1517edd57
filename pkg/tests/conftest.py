import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from src.liealg import so3, solvable2
from src.norms import NormSpec
from src.oracle import RandersAdapted

settings.register_profile(
    "finsler",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("finsler")

# solvable2 with F = alpha + beta, u = 0.5 e1, at v = (0.6, 0.8):
# [v, u]_m = -0.4 e2, F = 1.3, S = 3 / 2.6 * (-0.32)
SOLVABLE2_S = -0.32 * 3.0 / 2.6


@pytest.fixture
def adapted() -> RandersAdapted:
    return RandersAdapted(0.5, 0.6, 0.8, 3)


@pytest.fixture
def solvable2_randers():
    return solvable2(), NormSpec.randers(np.eye(2), [0.5, 0.0])


@pytest.fixture
def so3_randers():
    return so3(), NormSpec.randers(np.eye(3), [0.5, 0.0, 0.0])


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)
