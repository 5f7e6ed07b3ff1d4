"""
Tests for quadrature, sampling helpers, configuration and estimates.
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from apps.core.exceptions import ConfigurationError
from services.catalog import Profile, closed_current, radial
from services.integrate import Estimate, EstimateMethod, MCConfig, hessian_density
from services.integrate.sampling import (
    PairAccumulator,
    antithetic_directions,
    ball_volume,
    gauss_legendre,
    geometric_edges,
    shell_quadrature,
    shell_radii,
    sphere_area,
)


class TestQuadrature:
    """Gauss-Legendre rules and shell grids."""

    def test_polynomials_are_exact(self):
        x, w = gauss_legendre(16)
        for degree in range(0, 31, 5):
            assert float(np.dot(w, x**degree)) == pytest.approx(1.0 / (degree + 1))

    def test_geometric_edges_respect_ratio(self):
        edges = geometric_edges(1e-7, 0.5, 1.2)
        assert edges[0] == 1e-7 and edges[-1] == 0.5
        assert np.all(edges[1:] / edges[:-1] <= 1.2 + 1e-12)

    def test_shell_quadrature_integrates_power(self):
        rho, w = shell_quadrature(geometric_edges(1e-3, 1.0, 1.2))
        assert float(np.dot(w, rho**5)) == pytest.approx((1.0 - 1e-18) / 6.0, rel=1e-12)

    @pytest.mark.parametrize("n", [1, 2, 3, 5])
    def test_sphere_area_is_derivative_of_volume(self, n):
        r, h = 0.7, 1e-6
        derivative = (ball_volume(2 * n, r + h) - ball_volume(2 * n, r - h)) / (2 * h)
        assert sphere_area(n, r) == pytest.approx(derivative, rel=1e-8)


class TestSampling:
    """Directions, radii and the pair accumulator."""

    def test_directions_are_antithetic_units(self, rng):
        directions = antithetic_directions(rng, 50, 6)
        assert directions.shape == (100, 6)
        np.testing.assert_allclose(np.linalg.norm(directions, axis=1), 1.0)
        np.testing.assert_array_equal(directions[:50], -directions[50:])

    def test_shell_radii_stay_in_shell(self, rng):
        radii = shell_radii(rng, 0.2, 0.5, 6, 10_000)
        assert np.all((radii >= 0.2) & (radii < 0.5))

    def test_shell_radii_are_volume_uniform(self, rng):
        radii = shell_radii(rng, 0.0, 1.0, 4, 200_000)
        # P(|x| < 0.5) in a 4-ball is 0.5^4.
        assert float(np.mean(radii < 0.5)) == pytest.approx(0.0625, abs=3e-3)

    def test_accumulator_matches_batch_statistics(self, rng):
        values = rng.normal(size=4_000)
        accumulator = PairAccumulator()
        for chunk in np.split(values.reshape(2, -1), 4, axis=1):
            accumulator.add(np.concatenate([chunk[0], chunk[1]]))
        pairs = 0.5 * (values[:2_000] + values[2_000:])
        assert accumulator.count == 2_000
        assert accumulator.mean == pytest.approx(float(pairs.mean()), rel=1e-12)
        assert accumulator.variance_of_mean == pytest.approx(
            float(pairs.var(ddof=1)) / 2_000, rel=1e-10
        )


class TestMCConfig:
    """Configuration defaults, validation and streams."""

    def test_defaults_come_from_settings(self, settings):
        settings.LAB = {**settings.LAB, "SEED": 7, "MC_SHELLS": 5}
        config = MCConfig()
        assert config.seed == 7
        assert config.shells == 5

    @pytest.mark.parametrize(
        "changes",
        [
            {"samples_per_shell": 1},
            {"shells": 0},
            {"shell_ratio": 1.0},
            {"radial_inner_fraction": 0.0},
            {"workers": 0},
            {"rng_scheme": "mt19937"},
        ],
    )
    def test_invalid_values(self, changes):
        with pytest.raises(ConfigurationError):
            MCConfig(**changes)

    def test_reportable_threshold(self):
        assert MCConfig(samples_per_shell=1_000).reportable
        assert not MCConfig(samples_per_shell=999).reportable

    def test_streams_are_keyed(self):
        config = MCConfig(seed=3)
        a = config.stream("ball-mass", 0, 1).random(4)
        b = config.stream("ball-mass", 0, 1).random(4)
        c = config.stream("ball-mass", 1, 0).random(4)
        d = config.stream("sphere-mean", 0, 1).random(4)
        np.testing.assert_array_equal(a, b)
        assert not np.array_equal(a, c)
        assert not np.array_equal(a, d)


class TestEstimate:
    """The estimate schema."""

    def test_closed_forms_carry_no_error(self):
        with pytest.raises(ValidationError):
            Estimate(value=1.0, stderr=0.1, method=EstimateMethod.CLOSED_FORM)

    def test_zero_variance_sampling_is_accepted(self):
        estimate = Estimate(
            value=0.25, stderr=0.0, method=EstimateMethod.MONTE_CARLO, samples=4_000
        )
        assert estimate.is_monte_carlo
        assert estimate.stderr == 0.0

    def test_constant_density_samples_without_variance(self, small_setting):
        beta = closed_current(small_setting, radial(Profile.affine(), 2))
        estimate = ball_current_mass(beta, [0.0, 0.0], 0.5, MCConfig(prefer_radial=False))
        assert estimate.is_monte_carlo
        assert estimate.samples > 1
        assert estimate.value == pytest.approx(0.5**4, rel=1e-9)
        assert estimate.stderr <= 1e-12 * estimate.value

    def test_negative_error_rejected(self):
        with pytest.raises(ValidationError):
            Estimate(value=1.0, stderr=-0.1, method=EstimateMethod.MONTE_CARLO)

    def test_difference_adds_errors_in_quadrature(self):
        a = Estimate(value=2.0, stderr=0.3, method=EstimateMethod.MONTE_CARLO)
        b = Estimate(value=0.5, stderr=0.4, method=EstimateMethod.MONTE_CARLO)
        difference = a - b
        assert difference.value == 1.5
        assert difference.stderr == pytest.approx(0.5)


class TestDensity:
    """Pointwise densities."""

    def test_beta_power_density_is_wedge_constant(self, setting):
        current = closed_current(setting, radial(Profile.affine(), setting.n))
        points = np.array([[0.1, 0.2j, 0.3], [1.0, 0.0, -1.0]])
        expected = math.factorial(setting.n) / math.pi**setting.n
        np.testing.assert_allclose(hessian_density(current, points), expected)
