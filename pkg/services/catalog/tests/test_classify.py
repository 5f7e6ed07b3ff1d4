"""
Tests for m-subharmonicity classification.
"""

import pytest

from services.catalog import (
    CatalogError,
    MshClass,
    Profile,
    ScaledSum,
    catalog_currents,
    catalog_entries,
    certified_m_positive,
    cylindrical,
    fundamental_solution,
    msh_classify,
    msh_max_order,
    radial,
)
from services.hermitian import Setting
from tests.factories import (
    CylindricalFunctionFactory,
    RadialFunctionFactory,
    SimpleCurrentFactory,
)


class TestThresholds:
    """Closed-form thresholds for radial and cylindrical powers."""

    @pytest.mark.parametrize("n,m", [(2, 1), (3, 2), (4, 2), (4, 3)])
    def test_fundamental_solution_is_boundary(self, n, m):
        assert msh_classify(fundamental_solution(Setting(n=n, m=m)), m) is MshClass.BOUNDARY

    @pytest.mark.parametrize("n,m", [(3, 1), (3, 2), (4, 2), (5, 3)])
    def test_radial_power_flips_at_threshold(self, n, m):
        threshold = n / m - 1.0
        below = radial(Profile.power(threshold - 1e-6), n)
        above = radial(Profile.power(threshold + 1e-6), n)
        assert msh_classify(below, m) is MshClass.MSH
        assert msh_classify(above, m) is MshClass.NOT_MSH

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_log_is_msh_for_every_order(self, n):
        f = radial(Profile.log(), n)
        assert all(msh_classify(f, m) is MshClass.MSH for m in range(1, n))

    @pytest.mark.parametrize("n,m", [(4, 2), (5, 2), (5, 3)])
    def test_cylinder_at_threshold_is_msh(self, n, m):
        k = n - 1
        f = cylindrical(Profile.power(k / m - 1.0), n, k)
        assert msh_classify(f, m) is MshClass.MSH
        assert msh_classify(f, m + 1) is MshClass.NOT_MSH

    def test_affine_sign(self):
        assert msh_classify(radial(Profile.affine(-1.0, 1.0), 3), 3) is MshClass.MSH
        assert msh_classify(radial(Profile.affine(0.0, -1.0), 3), 1) is MshClass.NOT_MSH

    def test_order_out_of_range(self):
        with pytest.raises(CatalogError):
            msh_classify(radial(Profile.log(), 3), 4)


class TestSums:
    """Cone property and sampled classification."""

    def test_cone_property(self):
        setting = Setting(n=3, m=2)
        fund = fundamental_solution(setting)
        log = radial(Profile.log(), 3, [0.3, 0.0, 0.0])
        for a, b in [(1.0, 1.0), (0.5, 3.0), (2.0, 0.1)]:
            assert msh_classify(ScaledSum(terms=((a, fund), (b, log))), 2).is_msh

    def test_sampling_detects_non_msh_term(self):
        setting = Setting(n=3, m=2)
        bad = radial(Profile.power(2.0), 3, [0.5, 0.0, 0.0])
        mixed = ScaledSum(terms=((1.0, fundamental_solution(setting)), (1.0, bad)))
        assert msh_classify(mixed, 2) is MshClass.NOT_MSH

    def test_single_term_sum_defers_to_term(self):
        fund = fundamental_solution(Setting(n=4, m=2))
        assert msh_classify(fund.scaled(3.0), 2) is MshClass.BOUNDARY


class TestMaxOrder:
    """Largest m for which a function is m-sh."""

    @pytest.mark.parametrize("n,m", [(3, 2), (4, 2), (4, 3)])
    def test_catalog_max_orders(self, n, m):
        for entry in catalog_entries(Setting(n=n, m=m)):
            assert msh_max_order(entry.function) == entry.facts.msh_max_order, entry.name


class TestCertification:
    """m-positivity certification of simple currents."""

    def test_closed_currents_are_certified(self):
        setting = Setting(n=3, m=2)
        currents = {entry.name: entry.current for entry in catalog_currents(setting)}
        assert certified_m_positive(currents["ddc-fund"])
        assert certified_m_positive(currents["ddc-quad"])
        assert certified_m_positive(currents["ddc-radlog"])

    def test_coefficient_currents_are_not_certified(self):
        setting = Setting(n=3, m=2)
        currents = {entry.name: entry.current for entry in catalog_currents(setting)}
        assert not certified_m_positive(currents["t0"])
        assert not certified_m_positive(currents["mild-coefficient"])


class TestGeneratedObjects:
    """Classification of factory-built functions and currents."""

    def test_mild_cylinders_are_msh(self):
        for function in CylindricalFunctionFactory.build_batch(5, n=4):
            assert msh_classify(function, 2) is MshClass.MSH

    def test_mild_radial_powers_stop_below_plurisubharmonic(self):
        for function in RadialFunctionFactory.build_batch(5, n=3):
            assert msh_max_order(function) == 2

    def test_fundamental_currents_are_certified(self):
        for current in SimpleCurrentFactory.build_batch(4):
            assert 1 <= current.setting.m < current.setting.n
            assert certified_m_positive(current)
