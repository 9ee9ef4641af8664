"""Test configuration."""

import math
import sys
from pathlib import Path

import numpy as np
import pytest

# Add repository root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.ring.spin_core import RingConfig  # noqa: E402

DATA_DIR = Path(__file__).parent.parent / "data" / "sequences"


@pytest.fixture
def rng():
    """Deterministic random generator."""
    return np.random.default_rng(20240601)


@pytest.fixture
def random_configs(rng):
    """Factory for uniformly sampled ring configurations."""
    def sample(n, ka_range=(1.0, 40.0), x_range=(0.0, 3.5), gamma_range=(0.1, 2 * math.pi - 0.1)):
        ka = rng.uniform(*ka_range, size=n)
        x = rng.uniform(*x_range, size=n)
        gamma = rng.uniform(*gamma_range, size=n)
        return [RingConfig(ka=float(k), x=float(xv), gamma=float(g)) for k, xv, g in zip(ka, x, gamma)]
    return sample


@pytest.fixture
def sequences_dir():
    """Directory with sample sequence documents."""
    return DATA_DIR
