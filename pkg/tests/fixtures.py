"""
Shared pytest fixtures for the laboratory test suite.
"""

import numpy as np
import pytest

from services.catalog import Profile, fundamental_solution, radial
from services.hermitian import Setting
from services.integrate import MCConfig

from .factories import reseed_factories


@pytest.fixture(autouse=True)
def _deterministic_factories():
    """Reseed faker and factory-boy so every test sees the same data."""
    reseed_factories(1234)


@pytest.fixture
def setting():
    """The default (n, m) = (3, 2) setting."""
    return Setting(n=3, m=2)


@pytest.fixture
def small_setting():
    """The smallest setting, (n, m) = (2, 1)."""
    return Setting(n=2, m=1)


@pytest.fixture
def rng():
    """A seeded generator for test-side sampling."""
    return np.random.default_rng(20240715)


@pytest.fixture
def mc_config():
    """Monte-Carlo configuration from the test settings."""
    return MCConfig()


@pytest.fixture
def monte_carlo_config():
    """Test-settings configuration that never takes the radial shortcut."""
    return MCConfig(prefer_radial=False)


@pytest.fixture
def fund(setting):
    """The fundamental solution of the default setting."""
    return fundamental_solution(setting)


@pytest.fixture
def quad(setting):
    """|z|^2 in the default setting."""
    return radial(Profile.affine(), setting.n)
