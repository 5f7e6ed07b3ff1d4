"""
Tests for current masses over balls and annuli.
"""

import math

import pytest

from services.catalog import Profile, closed_current, fundamental_solution, radial
from services.hermitian import Setting
from services.integrate import (
    DivergentIntegralError,
    EstimateMethod,
    InvalidRegionError,
    MCConfig,
    SimpleCurrent,
    annulus_current_mass,
    ball_current_mass,
)
from tests.factories import MCConfigFactory


class TestRadialCalibration:
    """The radial path reproduces closed-form masses."""

    @pytest.mark.parametrize("n", [2, 3, 4])
    @pytest.mark.parametrize("r", [0.1, 0.5, 1.0])
    def test_beta_power_mass_is_r_to_2n(self, n, r, mc_config):
        current = closed_current(Setting(n=n, m=1), radial(Profile.affine(), n))
        estimate = ball_current_mass(current, [0.0] * n, r, mc_config)
        assert estimate.method is EstimateMethod.RADIAL_QUADRATURE
        assert estimate.value == pytest.approx(r ** (2 * n), rel=1e-6)
        assert estimate.atom == 0.0

    @pytest.mark.parametrize("n,m", [(3, 2), (4, 2), (4, 3)])
    def test_fundamental_current_mass(self, n, m, mc_config):
        setting = Setting(n=n, m=m)
        current = closed_current(setting, fundamental_solution(setting))
        r = 0.3
        expected = r ** (2.0 * n * (m - 1) / m)
        estimate = ball_current_mass(current, [0.0] * n, r, mc_config)
        assert estimate.value == pytest.approx(expected, rel=1e-6)

    def test_log_current_mass(self, mc_config):
        current = closed_current(Setting(n=3, m=2), radial(Profile.log(), 3))
        estimate = ball_current_mass(current, [0.0, 0.0, 0.0], 0.5, mc_config)
        assert estimate.value == pytest.approx(0.5**4, rel=1e-6)

    @pytest.mark.parametrize("n,m", [(2, 1), (3, 2), (4, 3)])
    def test_hessian_measure_is_unit_atom(self, n, m, mc_config):
        setting = Setting(n=n, m=m)
        current = closed_current(setting, fundamental_solution(setting), power=m)
        estimate = ball_current_mass(current, [0.0] * n, 0.7, mc_config)
        assert estimate.atom == pytest.approx(1.0)
        assert estimate.value == pytest.approx(1.0, abs=1e-6)


class TestAdditivity:
    """Ball and annulus masses fit together."""

    def test_ball_splits_into_ball_and_annulus(self, setting, fund, mc_config):
        current = closed_current(setting, fund)
        origin = [0.0] * setting.n
        outer = ball_current_mass(current, origin, 0.5, mc_config)
        inner = ball_current_mass(current, origin, 0.2, mc_config)
        shell = annulus_current_mass(current, origin, 0.2, 0.5, config=mc_config)
        assert outer.value == pytest.approx(inner.value + shell.value, rel=1e-8)

    def test_annulus_without_kernel_is_plain_mass(self, setting, quad, mc_config):
        current = closed_current(setting, quad)
        origin = [0.0] * setting.n
        plain = annulus_current_mass(current, origin, 0.1, 0.4, config=mc_config)
        zero = annulus_current_mass(current, origin, 0.1, 0.4, 0, mc_config)
        assert plain.value == zero.value

    def test_annulus_with_kernel_matches_closed_form(self, mc_config):
        setting = Setting(n=3, m=2)
        current = SimpleCurrent(setting, None, ())
        origin = [0.0, 0.0, 0.0]
        # beta^(n-m) ^ dd^c phi_m: mass t^n g'(t) = r^(2(n - s - 1)).
        r1, r2 = 0.2, 0.6
        estimate = annulus_current_mass(current, origin, r1, r2, 1, mc_config)
        exponent = 2.0 * (setting.n - setting.power - 1.0)
        assert estimate.value == pytest.approx(r2**exponent - r1**exponent, rel=1e-6)


class TestMonteCarlo:
    """Stratified Monte Carlo agrees with the radial path."""

    def test_constant_density_is_exact(self, setting, quad):
        current = closed_current(setting, quad)
        config = MCConfig(prefer_radial=False)
        estimate = ball_current_mass(current, [0.1, 0.0, 0.0], 0.5, config)
        assert estimate.is_monte_carlo
        assert estimate.value == pytest.approx(0.5**6, rel=1e-9)

    def test_fundamental_current_within_three_sigma(self, setting, fund):
        current = closed_current(setting, fund)
        config = MCConfig(prefer_radial=False)
        estimate = ball_current_mass(current, [0.0, 0.0, 0.0], 0.5, config)
        assert estimate.is_monte_carlo
        assert estimate.stderr > 0
        assert abs(estimate.value - 0.5**3) <= 3.0 * estimate.stderr + 1e-9

    def test_off_center_ball_is_bracketed_by_radial_masses(self, setting, fund):
        # B(a, 0.6) with |a| = 0.1 contains B(0, 0.5) and lies in B(0, 0.7).
        current = closed_current(setting, fund)
        config = MCConfig(prefer_radial=False)
        estimate = ball_current_mass(current, [0.1, 0.0, 0.0], 0.6, config)
        assert 0.5**3 - 3.0 * estimate.stderr <= estimate.value
        assert estimate.value <= 0.7**3 + 3.0 * estimate.stderr

    def test_same_seed_is_bitwise_reproducible(self, setting, fund):
        current = closed_current(setting, fund)
        config = MCConfigFactory(prefer_radial=False)
        first = ball_current_mass(current, [0.05, 0.0, 0.0], 0.4, config)
        second = ball_current_mass(current, [0.05, 0.0, 0.0], 0.4, config)
        assert first.value == second.value
        assert first.stderr == second.stderr

    def test_worker_count_does_not_change_result(self, setting, fund):
        current = closed_current(setting, fund)
        serial = MCConfigFactory(prefer_radial=False, workers=1)
        parallel = serial.with_overrides(workers=2)
        first = ball_current_mass(current, [0.05, 0.0, 0.0], 0.4, serial)
        second = ball_current_mass(current, [0.05, 0.0, 0.0], 0.4, parallel)
        assert first.value == second.value

    def test_seed_changes_result(self, setting, fund):
        current = closed_current(setting, fund)
        config = MCConfigFactory(prefer_radial=False)
        first = ball_current_mass(current, [0.05, 0.0, 0.0], 0.4, config)
        other = config.with_overrides(seed=config.seed + 1)
        second = ball_current_mass(current, [0.05, 0.0, 0.0], 0.4, other)
        assert first.value != second.value


class TestErrors:
    """Invalid regions and divergent masses."""

    def test_nonpositive_radius(self, setting, quad):
        current = closed_current(setting, quad)
        with pytest.raises(InvalidRegionError):
            ball_current_mass(current, [0.0] * 3, 0.0)

    @pytest.mark.parametrize("r1,r2", [(0.0, 0.5), (0.5, 0.2), (0.3, 0.3)])
    def test_bad_annulus(self, setting, quad, r1, r2):
        current = closed_current(setting, quad)
        with pytest.raises(InvalidRegionError):
            annulus_current_mass(current, [0.0] * 3, r1, r2)

    def test_over_singular_power_diverges(self, setting, fund):
        current = closed_current(setting, fund, power=3)
        with pytest.raises(DivergentIntegralError):
            ball_current_mass(current, [0.0] * 3, 0.5)

    def test_distant_pole_is_harmless(self, setting):
        fund = fundamental_solution(setting, [2.0, 0.0, 0.0])
        current = closed_current(setting, fund, power=3)
        config = MCConfig(prefer_radial=False)
        estimate = ball_current_mass(current, [0.0] * 3, 0.5, config)
        assert math.isfinite(estimate.value)
