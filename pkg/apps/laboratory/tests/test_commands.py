"""
Tests for the laboratory management commands.
"""

import csv
import io
import json

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from apps.laboratory import registry
from apps.laboratory.registry import Check, Outcome
from apps.laboratory.schemas import CheckStatus


def run(*args):
    stdout, stderr = io.StringIO(), io.StringIO()
    call_command(*args, stdout=stdout, stderr=stderr)
    return stdout.getvalue(), stderr.getvalue()


def returncode(*args):
    with pytest.raises(CommandError) as exc:
        run(*args)
    return exc.value.returncode


class TestCatalogCommand:
    """The catalog listing."""

    def test_csv(self):
        out, err = run("catalog")
        rows = list(csv.DictReader(io.StringIO(out)))
        names = [row["name"] for row in rows]
        assert names[0] == "fund"
        assert "t0" in names
        assert "cylinder" not in names
        assert len(rows) == 13
        assert "13 catalog entries" in err

    def test_json_with_cylinder(self):
        out, _ = run("catalog", "--n", "4", "--m", "2", "--format", "json")
        rows = json.loads(out)
        cylinder = next(row for row in rows if row["name"] == "cylinder")
        assert cylinder["iota"] == pytest.approx(6.0)
        assert cylinder["kind"] == "function"


class TestLelongCommand:
    """Lelong profiles."""

    def test_profile_csv(self):
        out, err = run("lelong", "--fn", "fund()", "--rmin", "1e-3", "--points", "8")
        lines = out.splitlines()
        assert lines[0] == "r,nu,stderr,method"
        assert len(lines) == 9
        assert "Lelong number" in err

    def test_json_to_file(self, tmp_path):
        path = tmp_path / "profile.json"
        out, _ = run("lelong", "--fn", "fund()", "--format", "json", "--out", str(path))
        data = json.loads(path.read_text())
        assert data["estimate"]["nu"] == pytest.approx(1.0, abs=1e-3)
        assert "Lelong number" in out

    @pytest.mark.parametrize(
        "args",
        [
            ("lelong",),
            ("lelong", "--n", "2", "--m", "2", "--fn", "fund()"),
            ("lelong", "--fn", "fund(("),
            ("lelong", "--fn", "fund()", "--center", "a,b"),
            ("lelong", "--fn", "fund()", "--points", "2"),
            ("lelong", "--fn", "fund()", "--out", "/nonexistent/dir/profile.csv"),
        ],
    )
    def test_usage_errors(self, args):
        assert returncode(*args) == 2


class TestAnalysisCommands:
    """Jensen, supremum and exponent commands."""

    def test_jensen(self):
        out, _ = run("jensen", "--fn", "fund()")
        assert json.loads(out)["jensen"]["residual"] < 1e-6

    def test_jensen_rejects_a_function_as_current(self):
        assert returncode("jensen", "--current", "fund()") == 2

    def test_sup(self):
        out, _ = run("sup", "--fn", "fund()")
        data = json.loads(out)
        assert set(data) == {"sup", "means"}
        assert data["sup"]["calibrated"] == pytest.approx(1.0, abs=1e-2)

    @pytest.mark.slow
    def test_exponent_csv(self):
        out, _ = run("exponent", "--n", "4", "--m", "2", "--fn", "fund()", "--format", "csv")
        lines = out.splitlines()
        assert lines[0] == "t,volume,stderr,method"
        assert len(lines) > 2

    @pytest.mark.slow
    def test_exponent_json(self):
        out, _ = run("exponent", "--n", "4", "--m", "2", "--fn", "fund()", "--format", "json")
        assert json.loads(out)["tail"]["alpha"] == pytest.approx(6.0, rel=0.05)


class TestVerifyCommand:
    """Suite runs through the command line."""

    def test_subset(self):
        out, err = run("verify", "--checks", "01-calibration,05-t0")
        data = json.loads(out)
        assert [check["id"] for check in data["checks"]] == ["01-calibration", "05-t0"]
        assert "1 pass" in err
        assert "1 finding" in err

    def test_unknown_check(self):
        assert returncode("verify", "--checks", "99-bogus") == 2

    def test_failing_check(self, monkeypatch):
        failing = Check(
            id="13-determinism",
            reference="forced failure",
            run=lambda context: Outcome(CheckStatus.FAIL, diagnostics="forced"),
        )
        monkeypatch.setitem(registry._REGISTRY, "13-determinism", failing)
        assert returncode("verify", "--checks", "13-determinism") == 1

    def test_reports_are_reproducible(self, tmp_path):
        first, second = tmp_path / "first.json", tmp_path / "second.json"
        run("verify", "--checks", "13-determinism", "--out", str(first))
        run("verify", "--checks", "13-determinism", "--out", str(second))
        reports = [json.loads(path.read_text()) for path in (first, second)]
        assert reports[0]["runId"] != reports[1]["runId"]
        for report in reports:
            del report["runId"]
        assert reports[0] == reports[1]

    def test_csv_report(self):
        out, _ = run("verify", "--checks", "05-t0", "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert rows[0]["status"] == "finding"
