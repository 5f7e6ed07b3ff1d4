"""
Tests for run configurations and report schemas.
"""

import json

import pytest

from apps.core.exceptions import ConfigurationError
from apps.laboratory.schemas import (
    CheckResult,
    CheckStatus,
    Report,
    ReportFormat,
    RunConfig,
    SettingSummary,
)


def make_report(*statuses):
    return Report(
        setting=SettingSummary(n=3, m=2),
        seed=42,
        kappa=1.0,
        checks=[
            CheckResult(id=f"{i:02d}-demo", reference="demo", status=status, value=0.5)
            for i, status in enumerate(statuses, start=1)
        ],
    )


class TestRunConfig:
    """Validation and defaults of run configurations."""

    def test_defaults_come_from_settings(self):
        config = RunConfig()
        assert (config.n, config.m) == (3, 2)
        assert config.seed == 42
        assert config.samples == 4_000
        assert config.format is ReportFormat.JSON
        assert config.checks == ()

    def test_check_ids_are_split(self):
        config = RunConfig.build(checks="01-calibration, 13-determinism")
        assert config.checks == ("01-calibration", "13-determinism")

    def test_unset_options_keep_defaults(self):
        config = RunConfig.build(n=None, m=None, seed=7)
        assert (config.n, config.m, config.seed) == (3, 2, 7)

    @pytest.mark.parametrize(
        "options",
        [{"n": 2, "m": 2}, {"n": 1, "m": 1}, {"samples": 1}, {"seed": -1}, {"format": "xml"}],
    )
    def test_invalid_options(self, options):
        with pytest.raises(ConfigurationError):
            RunConfig.build(**options)

    def test_derived_configurations(self):
        config = RunConfig.build(n=2, m=1, seed=9, samples=1_000, workers=2)
        mc = config.mc_config()
        assert (mc.seed, mc.samples_per_shell, mc.workers) == (9, 1_000, 2)
        assert config.setting.power == pytest.approx(1.0)


class TestReport:
    """Report serialization."""

    def test_json_uses_the_run_id_alias(self):
        data = json.loads(make_report(CheckStatus.PASS).model_dump_json(by_alias=True))
        assert set(data) == {"runId", "setting", "seed", "kappa", "checks"}
        assert data["setting"] == {"n": 3, "m": 2}
        assert data["checks"][0]["status"] == "pass"
        assert data["checks"][0]["paperRef"] == "demo"
        assert "reference" not in data["checks"][0]

    def test_check_results_load_from_report_json(self):
        result = CheckResult.model_validate(
            {"id": "01-demo", "paperRef": "demo", "status": "pass", "value": 0.5}
        )
        assert result.reference == "demo"

    def test_stable_json_drops_the_run_id(self):
        first, second = make_report(CheckStatus.PASS), make_report(CheckStatus.PASS)
        assert first.run_id != second.run_id
        assert first.stable_json() == second.stable_json()
        assert "runId" not in json.loads(first.stable_json())

    def test_failed_and_counts(self):
        report = make_report(CheckStatus.PASS, CheckStatus.FINDING, CheckStatus.FAIL)
        assert report.failed
        assert report.counts() == {"pass": 1, "fail": 1, "finding": 1, "skipped": 0}
        assert not make_report(CheckStatus.PASS, CheckStatus.FINDING).failed

    def test_sentinel_values(self):
        result = CheckResult(
            id="05-t0",
            reference="demo",
            status=CheckStatus.FINDING,
            value=-3.0,
            expected="does-not-converge",
        )
        assert result.expected == "does-not-converge"
        assert result.tolerance is None
