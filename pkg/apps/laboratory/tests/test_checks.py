"""
Tests for individual checks on radial catalog entries.

Sampled entries are left out where the check only needs the radial ones;
the full catalog runs through ``verify``.
"""

import pytest

from apps.laboratory import checks
from apps.laboratory.runner import build_context
from apps.laboratory.schemas import CheckStatus, RunConfig

RADIAL_ENTRIES = ("fund", "fund-scaled", "quad-shifted")


@pytest.fixture
def context():
    context = build_context(RunConfig())
    context.entries = [entry for entry in context.entries if entry.name in RADIAL_ENTRIES]
    return context


@pytest.fixture
def small_context():
    return build_context(RunConfig.build(n=2, m=1))


class TestClosedFormChecks:
    """Checks against closed forms."""

    def test_calibration(self, context):
        outcome = checks.calibration(context)
        assert outcome.status is CheckStatus.PASS
        assert outcome.value < 1e-6

    def test_fundamental(self, context):
        assert checks.fundamental(context).status is CheckStatus.PASS

    def test_jensen(self, context):
        assert checks.jensen(context).status is CheckStatus.PASS

    def test_green_identity(self, context):
        assert checks.green_identity_check(context).status is CheckStatus.PASS

    def test_sub_mean_value(self, context):
        assert checks.sub_mean_value(context).status is CheckStatus.PASS

    def test_markov(self, context):
        assert checks.markov(context).status is CheckStatus.PASS


class TestNegativeCurrents:
    """Currents with a negative coefficient."""

    def test_mild_coefficient_converges(self, context):
        assert checks.negative_currents(context).status is CheckStatus.PASS

    def test_t0_has_no_lelong_number(self, context):
        outcome = checks.t0_divergence(context)
        assert outcome.status is CheckStatus.FINDING
        assert outcome.value < 0
        assert outcome.expected == "does-not-converge"

    def test_t0_breaks_the_lower_bound(self, context):
        assert checks.t0_lower_bound(context).status is CheckStatus.FINDING


class TestMeanValueChecks:
    """Checks reading the shared mean-value and supremum reports."""

    def test_kappa_is_a_finding(self, context):
        outcome = checks.kappa(context)
        assert outcome.status is CheckStatus.FINDING
        assert outcome.value == pytest.approx(1.0, abs=1e-3)

    def test_kappa_without_calibration(self, context):
        context.kappa = None
        assert checks.kappa(context).status is CheckStatus.FAIL

    def test_nu_agreement(self, context):
        outcome = checks.nu_agreement(context)
        assert outcome.status is CheckStatus.PASS, outcome.diagnostics
        assert outcome.value < 1e-2

    def test_nu_agreement_flags_a_shifted_estimate(self, context):
        estimates = context.lelong_estimates()
        fund = estimates["fund"]
        estimates["fund"] = fund.model_copy(update={"nu": float(fund.nu) + 0.1})
        outcome = checks.nu_agreement(context)
        assert outcome.status is CheckStatus.FAIL
        assert "fund" in outcome.diagnostics

    def test_nu_agreement_without_calibration(self, context):
        context.kappa = None
        assert checks.nu_agreement(context).status is CheckStatus.FAIL

    def test_computed_lelong_numbers_match_the_catalog(self, context):
        estimates = context.lelong_estimates()
        assert estimates["fund"].nu == pytest.approx(1.0, abs=1e-3)
        assert estimates["fund-scaled"].nu == pytest.approx(2.5, abs=2.5e-3)
        assert estimates["quad-shifted"].nu == pytest.approx(0.0, abs=1e-3)

    def test_ratio_law(self, context):
        assert checks.ratio_law(context).status is CheckStatus.PASS

    def test_convexity(self, context):
        assert checks.convexity_check(context).status is CheckStatus.PASS

    def test_lelong_gap(self, context):
        outcome = checks.lelong_gap(context)
        assert outcome.status is CheckStatus.FINDING
        assert outcome.value >= -0.01

    def test_lelong_gap_without_entries(self, context):
        context.entries = []
        assert checks.lelong_gap(context).status is CheckStatus.SKIPPED

    def test_reports_are_shared(self, context):
        assert context.mean_reports() is context.mean_reports()
        assert context.lelong_estimates() is context.lelong_estimates()


class TestStructuralChecks:
    """Monotonicity, the Lelong map and determinism."""

    def test_monotonicity(self, context):
        assert checks.monotonicity(context).status is CheckStatus.PASS

    def test_lelong_map(self, small_context):
        outcome = checks.lelong_map_check(small_context)
        assert outcome.status is CheckStatus.PASS, outcome.diagnostics

    def test_determinism(self, context):
        assert checks.determinism(context).status is CheckStatus.PASS


@pytest.mark.slow
class TestExponentChecks:
    """Integrability exponent checks."""

    def test_bounds(self, context):
        context.entries = [entry for entry in context.entries if entry.name.startswith("fund")]
        outcome = checks.exponent_bounds(context)
        assert outcome.status is CheckStatus.PASS, outcome.diagnostics

    def test_agreement(self, context):
        outcome = checks.exponent_agreement(context)
        assert outcome.status is CheckStatus.PASS, outcome.diagnostics

    def test_infimum_monotonicity(self, context):
        outcome = checks.infimum_monotonicity(context)
        assert outcome.status is CheckStatus.PASS, outcome.diagnostics
