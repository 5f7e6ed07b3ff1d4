"""
Tests for m-Lelong functions, Lelong numbers and extrapolation.
"""

import io

import numpy as np
import pytest

from services.catalog import (
    BidimensionError,
    Profile,
    ScaledSum,
    catalog_currents,
    catalog_entry,
    closed_current,
    fundamental_solution,
    radial,
)
from services.hermitian import Setting
from services.integrate import EstimateMethod
from services.lelong import (
    DOES_NOT_CONVERGE,
    FitModel,
    InvalidGridError,
    LelongConfig,
    LelongMethod,
    extrapolate,
    lelong_function,
    lelong_number,
    radius_grid,
    write_profile_csv,
)

PAIRS = [(2, 1), (3, 1), (3, 2), (4, 2)]


def current_named(setting, name):
    return {e.name: e.current for e in catalog_currents(setting)}[name]


class TestRadiusGrid:
    """Geometric radius grids."""

    def test_endpoints_and_order(self):
        radii = radius_grid(1e-4, 0.5, 32)
        assert radii[0] == pytest.approx(1e-4)
        assert radii[-1] == pytest.approx(0.5)
        assert np.all(np.diff(radii) > 0)

    @pytest.mark.parametrize(
        "r_min,r_max,points", [(0.0, 0.5, 8), (0.5, 0.1, 8), (1e-3, 0.5, 1)]
    )
    def test_invalid_grids(self, r_min, r_max, points):
        with pytest.raises(InvalidGridError):
            radius_grid(r_min, r_max, points)

    def test_fit_radii_are_the_smallest(self):
        config = LelongConfig(r_min=1e-4, r_max=0.5, points=16)
        np.testing.assert_allclose(config.fit_radii(), config.radii()[:8])


class TestExtrapolate:
    """Limits of ratio profiles."""

    radii = [1e-4 * 1.8**k for k in range(8)]

    def test_flat_profile(self):
        nu, stderr, diagnostics = extrapolate(self.radii, [2.5] * 8, [0.0] * 8)
        assert nu == 2.5
        assert stderr == 0.0
        assert diagnostics.model is FitModel.FLAT

    def test_power_law_profile(self):
        values = [-1.0 + 0.6 * r**2 for r in self.radii]
        nu, _, diagnostics = extrapolate(self.radii, values, [0.0] * 8)
        assert nu == pytest.approx(-1.0, abs=1e-6)
        assert diagnostics.model is FitModel.POWER_LAW
        assert diagnostics.gamma == pytest.approx(2.0, rel=1e-3)

    def test_blowup_does_not_converge(self):
        values = [-3.0 / r for r in self.radii]
        nu, _, diagnostics = extrapolate(self.radii, values, [0.0] * 8)
        assert nu == DOES_NOT_CONVERGE
        assert diagnostics.model is FitModel.NONE
        assert "increments" in diagnostics.message

    def test_non_finite_values_do_not_converge(self):
        values = [1.0] * 7 + [float("nan")]
        nu, _, _ = extrapolate(self.radii, values, [0.0] * 8)
        assert nu == DOES_NOT_CONVERGE

    def test_noise_within_sigma_is_flat(self):
        values = [1.0 + (-1) ** k * 1e-4 for k in range(8)]
        nu, _, diagnostics = extrapolate(self.radii, values, [1e-4] * 8, sigma=3.0)
        assert diagnostics.model is FitModel.FLAT
        assert nu == pytest.approx(1.0, abs=1e-3)


class TestLelongNumber:
    """Lelong numbers of the catalog currents."""

    @pytest.mark.parametrize("n,m", PAIRS)
    def test_fundamental_solution_has_lelong_number_one(self, n, m):
        setting = Setting(n=n, m=m)
        estimate, profile = lelong_number(current_named(setting, "ddc-fund"), [0.0] * n)
        assert estimate.method is LelongMethod.DEFINITION
        assert estimate.nu == pytest.approx(1.0, abs=1e-6)
        assert profile.method is EstimateMethod.RADIAL_QUADRATURE
        assert estimate.monotone is True

    def test_scaled_fundamental_solution(self, setting):
        function = catalog_entry(setting, "fund-scaled").function
        current = closed_current(setting, function)
        estimate, _ = lelong_number(current, [0.0] * setting.n)
        assert estimate.nu == pytest.approx(2.5, abs=1e-5)

    @pytest.mark.parametrize("name", ["ddc-quad", "ddc-radlog"])
    def test_zero_lelong_numbers(self, setting, name):
        estimate, _ = lelong_number(current_named(setting, name), [0.0] * setting.n)
        assert estimate.converged
        assert estimate.nu == pytest.approx(0.0, abs=1e-3)

    def test_mild_coefficient_converges_to_minus_one(self, setting):
        estimate, _ = lelong_number(
            current_named(setting, "mild-coefficient"), [0.0] * setting.n
        )
        assert estimate.nu == pytest.approx(-1.0, abs=1e-3)

    @pytest.mark.parametrize("n,m", PAIRS)
    def test_t0_does_not_converge(self, n, m):
        setting = Setting(n=n, m=m)
        estimate, _ = lelong_number(current_named(setting, "t0"), [0.0] * n)
        assert estimate.nu == DOES_NOT_CONVERGE
        assert not estimate.converged

    def test_t0_blows_up_like_the_weight(self, setting):
        s = setting.power
        profile = lelong_function(
            current_named(setting, "t0"), [0.0] * setting.n, 1e-3, 1e-2, 8
        )
        scaled = np.asarray(profile.values) * np.asarray(profile.radii) ** (2 * s)
        np.testing.assert_allclose(scaled, -(1.0 + 1.0 / s), rtol=1e-2)

    def test_profile_method_is_recorded(self, setting, monte_carlo_config):
        profile = lelong_function(
            current_named(setting, "ddc-quad"),
            [0.0] * setting.n,
            0.05,
            0.4,
            4,
            monte_carlo_config,
        )
        assert profile.method is EstimateMethod.MONTE_CARLO
        power = 2 * setting.n - setting.lelong_exponent(2)
        expected = np.asarray(profile.radii) ** power
        np.testing.assert_allclose(profile.values, expected, rtol=1e-2)

    def test_bidimension_error(self, setting, fund):
        current = closed_current(setting, fund, power=2, beta_power=1)
        with pytest.raises(BidimensionError):
            lelong_number(current, [0.0] * setting.n)

    @pytest.mark.parametrize("a,b", [(2.0, 3.0), (0.5, 1.5)])
    def test_lelong_number_is_linear(self, setting, a, b):
        n = setting.n
        fund = fundamental_solution(setting)
        scaled = catalog_entry(setting, "fund-scaled").function
        radlog = radial(Profile.log(), n)
        total = ScaledSum(terms=((a, fund), (b, scaled), (1.0, radlog)))

        def nu(function):
            estimate, _ = lelong_number(closed_current(setting, function), [0.0] * n)
            return estimate.nu

        expected = a * nu(fund) + b * nu(scaled) + nu(radlog)
        assert expected == pytest.approx(a + 2.5 * b, abs=1e-2)
        assert nu(total) == pytest.approx(expected, abs=1e-3 * (a + 2.5 * b))

    @pytest.mark.slow
    def test_sum_with_a_distant_pole(self, setting):
        entry = catalog_entry(setting, "fund-plus-milder")
        estimate, _ = lelong_number(closed_current(setting, entry.function), [0.0] * setting.n)
        (_, fund), (_, milder) = entry.function.terms
        parts = [
            lelong_number(closed_current(setting, term), [0.0] * setting.n)[0].nu
            for term in (fund, milder)
        ]
        assert estimate.nu == pytest.approx(sum(parts), abs=max(1e-2, 3 * estimate.stderr))

    def test_off_pole_center_has_zero_number(self, small_setting):
        current = closed_current(small_setting, fundamental_solution(small_setting))
        lelong_config = LelongConfig(r_min=1e-4, r_max=0.2, points=8)
        estimate, _ = lelong_number(current, [0.3, 0.0], lelong_config=lelong_config)
        assert estimate.nu == pytest.approx(0.0, abs=1e-2)


class TestProfileCsv:
    """CSV export of profiles."""

    def test_columns_and_precision(self, setting):
        profile = lelong_function(
            current_named(setting, "ddc-fund"), [0.0] * setting.n, 1e-3, 0.5, 3
        )
        stream = io.StringIO()
        write_profile_csv(profile, stream)
        lines = stream.getvalue().splitlines()
        assert lines[0] == "r,nu,stderr,method"
        assert len(lines) == 4
        r, nu, stderr, method = lines[1].split(",")
        assert float(r) == profile.radii[0]
        assert float(nu) == profile.values[0]
        assert method == "radial-quadrature"
