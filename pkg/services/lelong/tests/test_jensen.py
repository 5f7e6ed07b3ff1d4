"""
Tests for the Lelong-Jensen identity and negative currents.
"""

import pytest

from services.catalog import catalog_currents
from services.hermitian import Setting
from services.integrate import InvalidRegionError, MCConfig
from services.lelong import (
    LelongConfig,
    jensen_residual,
    lelong_jensen,
    negative_current_check,
    residual_scale,
)

PAIRS = [(2, 1), (3, 2), (4, 2), (4, 3)]


def current_named(setting, name):
    return {e.name: e.current for e in catalog_currents(setting)}[name]


class TestLelongJensen:
    """Both sides of the identity agree."""

    @pytest.mark.parametrize("n,m", PAIRS)
    @pytest.mark.parametrize("name", ["ddc-quad", "mild-coefficient"])
    def test_radial_residuals(self, n, m, name):
        setting = Setting(n=n, m=m)
        report = lelong_jensen(current_named(setting, name), [0.0] * n, 0.1, 0.4)
        assert report.residual < 1e-6

    @pytest.mark.parametrize("n,m", PAIRS)
    def test_fundamental_residual(self, n, m):
        setting = Setting(n=n, m=m)
        report = lelong_jensen(current_named(setting, "ddc-fund"), [0.0] * n, 0.1, 0.4)
        assert report.residual < 1e-2

    def test_closed_fundamental_solution_is_flat(self, setting):
        report = lelong_jensen(current_named(setting, "ddc-fund"), [0.0] * 3, 0.1, 0.4)
        assert report.lhs == pytest.approx(0.0, abs=1e-9)
        assert report.first_term == 0.0
        assert report.second_term == 0.0

    def test_calibration_current_lives_in_the_annulus(self, setting):
        report = lelong_jensen(current_named(setting, "ddc-quad"), [0.0] * 3, 0.1, 0.4)
        exponent = 2 * setting.n / setting.m
        assert report.annulus_term == pytest.approx(0.4**exponent - 0.1**exponent, rel=1e-8)

    def test_skewed_term_breaks_the_balance(self, setting):
        report = lelong_jensen(current_named(setting, "ddc-quad"), [0.0] * 3, 0.1, 0.4)
        skewed = jensen_residual(
            report.lhs, report.first_term, report.second_term, 1.1 * report.annulus_term
        )
        assert skewed == pytest.approx(0.1 / 1.1, rel=1e-4)
        assert skewed > 1e-2

    def test_residual_is_relative_to_the_terms(self):
        assert jensen_residual(0.063, 0.0, 0.0, 0.0693) == pytest.approx(0.0063 / 0.0693)
        assert residual_scale(0.0, 0.0, 0.0, 0.0) == 1e-12
        assert residual_scale(-0.5, 0.25, -0.5, 0.0) == 0.75

    def test_mild_coefficient_uses_every_term(self, setting):
        report = lelong_jensen(
            current_named(setting, "mild-coefficient"), [0.0] * 3, 0.1, 0.4
        )
        assert report.first_term > 0
        assert report.second_term > 0
        assert report.annulus_term != 0

    def test_nonclosed_current_against_sampled_annulus(self, setting):
        report = lelong_jensen(
            current_named(setting, "jensen-nonclosed"),
            [0.0] * 3,
            0.1,
            0.4,
            annulus_config=MCConfig(prefer_radial=False),
        )
        assert report.first_term == 0.0
        assert report.second_term == 0.0
        assert report.stderr > 0
        assert report.residual < 2e-2

    def test_invalid_radii(self, setting):
        with pytest.raises(InvalidRegionError):
            lelong_jensen(current_named(setting, "ddc-fund"), [0.0] * 3, 0.4, 0.1)


class TestNegativeCurrents:
    """Lower bound and convergence for negative currents."""

    @pytest.mark.parametrize("n,m", PAIRS)
    def test_t0_violates_the_bound(self, n, m):
        setting = Setting(n=n, m=m)
        report = negative_current_check(current_named(setting, "t0"), [0.0] * n, 0.5)
        assert not report.bound_holds
        assert not report.kernel_integrable
        assert report.kernel_exponent == pytest.approx(1 - 2 * n / m, abs=1e-6)
        assert not report.converged
        assert report.limit is None

    def test_t0_upsilon_is_minus_the_weight_power(self, setting):
        report = negative_current_check(current_named(setting, "t0"), [0.0] * 3, 0.5)
        s = setting.power
        for r, value in zip(report.radii, report.upsilon):
            assert value == pytest.approx(-(r ** (-2 * s)), rel=1e-6)

    @pytest.mark.parametrize("n,m", PAIRS)
    def test_mild_coefficient_converges(self, n, m):
        setting = Setting(n=n, m=m)
        report = negative_current_check(
            current_named(setting, "mild-coefficient"), [0.0] * n, 0.5
        )
        assert report.bound_holds
        assert report.kernel_integrable
        assert report.kernel_exponent == pytest.approx(1.0, abs=1e-3)
        assert report.g_nonincreasing
        assert report.converged
        assert report.limit == pytest.approx(-1.0, abs=1e-3)

    def test_g_profile_is_constant_for_mild_coefficient(self, setting):
        report = negative_current_check(
            current_named(setting, "mild-coefficient"), [0.0] * 3, 0.5
        )
        assert report.g_profile == pytest.approx([-1.0] * len(report.radii), abs=1e-6)

    def test_closed_current_is_trivially_integrable(self, setting):
        lelong_config = LelongConfig(r_min=1e-3, r_max=0.5, points=8)
        report = negative_current_check(
            current_named(setting, "ddc-fund"), [0.0] * 3, 0.5, lelong_config=lelong_config
        )
        assert report.kernel_exponent is None
        assert report.kernel_integrable
        assert report.limit == pytest.approx(1.0, abs=1e-6)
