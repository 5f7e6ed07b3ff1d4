"""
Tests for sublevel volumes.
"""

import math

import numpy as np
import pytest

from services.catalog import catalog_entry, fundamental_solution
from services.exponent import (
    CompactRegion,
    NotNegativeOnRegionError,
    VolumeMethod,
    lens_volume,
    sublevel_volume,
    sublevel_volumes,
    tube_volume,
)
from services.hermitian import Setting
from services.integrate.sampling import ball_volume

PAIRS = [(2, 1), (3, 2), (4, 2), (4, 3)]


def fund_radius_squared(setting, t):
    s = setting.power
    return (s * abs(t)) ** (-1.0 / s)


class TestClosedForms:
    """Lens and tube volumes."""

    def test_disjoint_and_nested_lenses(self):
        assert lens_volume(4, 1.0, 0.5, 2.0) == 0.0
        assert lens_volume(4, 1.0, 0.5, 0.2) == pytest.approx(ball_volume(4, 0.5))

    def test_unit_disks_at_unit_distance(self):
        expected = 2 * math.pi / 3 - math.sqrt(3) / 2
        assert lens_volume(2, 1.0, 1.0, 1.0) == pytest.approx(expected, rel=1e-12)

    def test_lens_is_symmetric(self):
        assert lens_volume(6, 1.0, 0.4, 0.9) == pytest.approx(
            lens_volume(6, 0.4, 1.0, 0.9), rel=1e-12
        )

    def test_full_tube_is_a_ball(self):
        assert tube_volume(3, 3, 1.0, 0.2) == pytest.approx(ball_volume(6, 0.2))
        assert tube_volume(4, 3, 0.5, 1.0) == pytest.approx(ball_volume(8, 0.5))

    def test_thin_tube_scales_with_the_transverse_area(self):
        thin, thinner = tube_volume(4, 3, 0.5, 1e-3), tube_volume(4, 3, 0.5, 5e-4)
        assert thin / thinner == pytest.approx(2.0**6, rel=1e-5)


class TestSublevelVolume:
    """Volumes of {f <= t} inside a region."""

    @pytest.mark.parametrize("n,m", PAIRS)
    def test_fundamental_solution_in_the_unit_ball(self, n, m):
        setting = Setting(n=n, m=m)
        t = -50.0
        estimate = sublevel_volume(
            fundamental_solution(setting), CompactRegion.ball([0] * n, 1.0), t
        )
        rho2 = fund_radius_squared(setting, t)
        assert estimate.method is VolumeMethod.CLOSED_FORM
        assert estimate.volume == pytest.approx(
            math.pi**n / math.factorial(n) * rho2**n, rel=1e-10
        )

    def test_nonnegative_level_is_degenerate(self, fund):
        region = CompactRegion.ball([0, 0, 0], 0.5)
        estimate = sublevel_volume(fund, region, 0.0)
        assert estimate.degenerate
        assert estimate.volume == pytest.approx(region.volume)

    def test_shallow_level_exhausts_the_region(self, fund):
        region = CompactRegion.ball([0, 0, 0], 0.5)
        assert sublevel_volume(fund, region, -1e-6).volume == pytest.approx(
            region.volume
        )

    def test_off_center_pole_uses_the_lens(self, fund):
        region = CompactRegion.ball([0.3, 0, 0], 0.5)
        estimate = sublevel_volume(fund, region, -4.0)
        rho = math.sqrt(fund_radius_squared(Setting(n=3, m=2), -4.0))
        assert estimate.volume == pytest.approx(lens_volume(6, 0.5, rho, 0.3))
        assert 0 < estimate.volume < ball_volume(6, rho)

    def test_cylinder_tube_volume(self):
        setting = Setting(n=4, m=2)
        function = catalog_entry(setting, "cylinder").function
        estimate = sublevel_volume(function, CompactRegion.ball([0] * 4, 0.5), -100.0)
        rho = 100.0 ** (-1.0 / (2 * 0.5))
        assert estimate.volume == pytest.approx(tube_volume(4, 3, 0.5, rho))

    def test_sampled_volume_matches_closed_form(self, fund):
        ball = CompactRegion.ball([0, 0, 0], 0.5)
        region = CompactRegion.union(ball, CompactRegion.ball([2, 0, 0], 0.5))
        exact = sublevel_volume(fund, ball, -10.0).volume
        estimate = sublevel_volume(fund, region, -10.0)
        assert estimate.method is VolumeMethod.MONTE_CARLO
        assert abs(estimate.volume - exact) <= 3 * estimate.stderr + 1e-2 * exact

    def test_sampled_volumes_are_monotone(self, setting):
        function = catalog_entry(setting, "two-pole").function
        region = CompactRegion.ball([0, 0, 0], 1.0)
        levels = -np.geomspace(10.0, 1e3, 6)
        volumes = [e.volume for e in sublevel_volumes(function, region, levels)]
        assert all(a >= b for a, b in zip(volumes, volumes[1:]))
        assert volumes[0] > volumes[-1] > 0

    def test_positive_function_is_rejected(self, setting):
        function = catalog_entry(setting, "quad-shifted").function
        with pytest.raises(NotNegativeOnRegionError):
            sublevel_volume(function, CompactRegion.ball([0, 0, 0], 2.0), -1.0)
