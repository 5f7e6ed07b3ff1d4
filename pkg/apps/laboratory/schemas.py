"""
Run configuration and report schemas for the verification suite.

The JSON report has the shape
``{runId, setting: {n, m}, seed, kappa, checks: [...]}``; everything except
``runId`` is a deterministic function of the run configuration.
"""

import uuid
from enum import Enum
from pathlib import Path

import pydantic
from django.conf import settings
from pydantic import BaseModel, ConfigDict, Field, field_validator

from apps.core.exceptions import ConfigurationError
from services.exponent import ExponentConfig
from services.hermitian import InvalidSettingError, Setting
from services.integrate import MCConfig
from services.lelong import LelongConfig

Number = float | str | None


def _lab(key: str, default):
    return getattr(settings, "LAB", {}).get(key, default)


def _setting(key: str, default: int) -> int:
    return getattr(settings, "LAB_SETTING", {}).get(key, default)


class CheckStatus(str, Enum):
    """Outcome of a single check."""

    PASS = "pass"
    FAIL = "fail"
    FINDING = "finding"
    SKIPPED = "skipped"


class ReportFormat(str, Enum):
    """Output formats of the report writer."""

    JSON = "json"
    CSV = "csv"


class RunConfig(BaseModel):
    """
    Validated configuration of a suite run or a single computation.

    An empty ``checks`` list selects every registered check.

    Example:
        >>> RunConfig(n=2, m=1, seed=7).setting
        Setting(n=2, m=1)
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(default_factory=lambda: _setting("N", 3))
    m: int = Field(default_factory=lambda: _setting("M", 2))
    seed: int = Field(default_factory=lambda: _lab("SEED", 42), ge=0)
    samples: int = Field(default_factory=lambda: _lab("SAMPLES_PER_SHELL", 200_000), ge=2)
    workers: int = Field(default_factory=lambda: _lab("WORKERS", 1), ge=1)
    checks: tuple[str, ...] = ()
    out: Path | None = None
    format: ReportFormat = ReportFormat.JSON

    @field_validator("checks", mode="before")
    @classmethod
    def split_checks(cls, value):
        if isinstance(value, str):
            return tuple(part.strip() for part in value.split(",") if part.strip())
        return value

    @classmethod
    def build(cls, **options) -> "RunConfig":
        """
        Build a configuration, dropping unset options.

        Raises:
            ConfigurationError: If a value is invalid or (n, m) is not a setting.
        """
        values = {key: value for key, value in options.items() if value is not None}
        try:
            config = cls(**values)
            Setting(n=config.n, m=config.m)
        except pydantic.ValidationError as e:
            raise ConfigurationError(f"Invalid run configuration: {e}") from e
        except InvalidSettingError as e:
            raise ConfigurationError(e.message) from e
        return config

    @property
    def setting(self) -> Setting:
        return Setting(n=self.n, m=self.m)

    def mc_config(self) -> MCConfig:
        return MCConfig(seed=self.seed, samples_per_shell=self.samples, workers=self.workers)

    def lelong_config(self) -> LelongConfig:
        return LelongConfig()

    def exponent_config(self) -> ExponentConfig:
        return ExponentConfig()


class CheckResult(BaseModel):
    """Result of one numbered check; ``reference`` names the property tested."""

    model_config = ConfigDict(populate_by_name=True)

    id: str
    reference: str = Field(alias="paperRef")
    status: CheckStatus
    value: Number = None
    expected: Number = None
    tolerance: Number = None
    diagnostics: str = ""

    @property
    def failed(self) -> bool:
        return self.status is CheckStatus.FAIL


class SettingSummary(BaseModel):
    """The (n, m) pair as it appears in a report."""

    n: int
    m: int


class Report(BaseModel):
    """A complete suite report, checks ordered by id."""

    model_config = ConfigDict(populate_by_name=True)

    run_id: str = Field(default_factory=lambda: str(uuid.uuid4()), alias="runId")
    setting: SettingSummary
    seed: int
    kappa: float | None
    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def failed(self) -> bool:
        return any(check.failed for check in self.checks)

    def counts(self) -> dict[str, int]:
        """Number of checks per status, in status order."""
        return {
            status.value: sum(1 for c in self.checks if c.status is status)
            for status in CheckStatus
        }

    def stable_json(self) -> str:
        """The report as JSON without the run id."""
        return self.model_dump_json(by_alias=True, exclude={"run_id"}, indent=2)
