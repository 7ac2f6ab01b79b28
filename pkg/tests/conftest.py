import numpy as np
import pytest

from paretogof.datasets import GOLFER_EARNINGS, GOLFER_THRESHOLD


@pytest.fixture(scope="session")
def golfer_scaled():
    return np.asarray(GOLFER_EARNINGS, dtype=float) / GOLFER_THRESHOLD


@pytest.fixture()
def rng():
    return np.random.default_rng(20260811)
