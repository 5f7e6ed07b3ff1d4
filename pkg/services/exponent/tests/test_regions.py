"""
Tests for compact regions and the exponent configuration.
"""

import math

import numpy as np
import pytest

from apps.core.exceptions import ConfigurationError
from services.exponent import CompactRegion, ExponentConfig
from services.integrate import InvalidRegionError


class TestCompactRegion:
    """Balls and unions of balls."""

    def test_ball_volume(self):
        region = CompactRegion.ball([0, 0, 0], 0.5)
        assert region.volume == pytest.approx(math.pi**3 / 6 * 0.5**6, rel=1e-12)
        assert region.is_ball
        assert region.dim == 3

    def test_disjoint_union_volume_is_exact(self):
        region = CompactRegion.union(
            CompactRegion.ball([0, 0], 0.5), CompactRegion.ball([2, 0], 1.0)
        )
        expected = math.pi**2 / 2 * (0.5**4 + 1.0)
        assert region.volume == pytest.approx(expected, rel=1e-12)
        assert region.radius == 1.0

    def test_repeated_ball_counts_once(self):
        ball = CompactRegion.ball([0, 0], 0.5)
        region = CompactRegion.union(ball, ball)
        assert region.volume == pytest.approx(ball.volume, rel=1e-9)

    def test_overlapping_union_volume(self):
        first = CompactRegion.ball([0, 0], 1.0)
        region = CompactRegion.union(first, CompactRegion.ball([0.5, 0], 1.0))
        assert first.volume < region.volume < 2 * first.volume

    def test_contains_gap_and_reach(self):
        region = CompactRegion.ball([0, 0], 0.5)
        assert region.contains([[0.3, 0.3j], [0.6, 0]]).tolist() == [True, False]
        assert region.gap([1.0, 0]) == pytest.approx(0.5)
        assert region.gap([0.1, 0]) == 0.0
        assert region.reach([0.1, 0]) == pytest.approx(0.6)
        assert region.gap([0.0, 3.0], k=1) == 0.0

    def test_uniform_samples_lie_inside(self, rng):
        region = CompactRegion.union(
            CompactRegion.ball([0, 0], 0.5), CompactRegion.ball([1, 0], 0.25)
        )
        points, density = region.sample_uniform(rng, 500)
        assert region.contains(points).all()
        assert np.all(density > 0)

    @pytest.mark.parametrize(
        "balls",
        [
            (),
            ((((0j, 0j)), 0.0),),
            ((((0j, 0j)), 1.0), (((0j,)), 1.0)),
        ],
    )
    def test_invalid_regions(self, balls):
        with pytest.raises(InvalidRegionError):
            CompactRegion(balls=balls)


class TestExponentConfig:
    """Validation of estimator settings."""

    def test_defaults_from_settings(self):
        config = ExponentConfig()
        assert config.angular_samples == 128
        assert config.tolerance == pytest.approx(0.05)

    def test_with_overrides(self):
        assert ExponentConfig().with_overrides(t_points=5).t_points == 5

    @pytest.mark.parametrize(
        "changes", [{"t_points": 2}, {"rho_fraction": 1.5}, {"angular_samples": 1}]
    )
    def test_invalid_values(self, changes):
        with pytest.raises(ConfigurationError):
            ExponentConfig(**changes)
