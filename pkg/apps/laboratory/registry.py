"""
Check registry and the context every check runs in.

Checks are plain functions registered under a numbered id. Each receives a
``CheckContext`` and returns an ``Outcome``; the runner turns outcomes into
``CheckResult`` rows.
"""

import threading
from collections.abc import Callable
from dataclasses import dataclass, field
from functools import cached_property

from django.conf import settings

from services.catalog import (
    CatalogEntry,
    CurrentEntry,
    catalog_currents,
    catalog_entries,
    closed_current,
)
from services.exponent import ExponentConfig
from services.hermitian import Setting
from services.integrate import MCConfig
from services.lelong import (
    LelongConfig,
    LelongEstimate,
    MeanValueReport,
    SupGrowthReport,
    lelong_number,
    mean_value_ratios,
    sup_growth,
)

from .exceptions import UnknownCheckError
from .schemas import CheckStatus, Number


def tolerance(key: str, default: float) -> float:
    """A tolerance from ``settings.LAB["TOLERANCES"]``."""
    return getattr(settings, "LAB", {}).get("TOLERANCES", {}).get(key, default)


@dataclass(frozen=True)
class Outcome:
    """What a check function reports back."""

    status: CheckStatus
    value: Number = None
    expected: Number = None
    tolerance: Number = None
    diagnostics: str = ""

    @classmethod
    def verdict(cls, ok: bool, **fields) -> "Outcome":
        return cls(status=CheckStatus.PASS if ok else CheckStatus.FAIL, **fields)


@dataclass
class CheckContext:
    """
    Shared inputs of one suite run.

    Lelong numbers, mean-value and supremum reports over the catalog are
    computed once and shared by the checks that read them.
    """

    setting: Setting
    config: MCConfig
    lelong_config: LelongConfig
    exponent_config: ExponentConfig
    kappa: float | None
    _means: dict[str, MeanValueReport] | None = field(default=None, init=False, repr=False)
    _sups: dict[str, SupGrowthReport] | None = field(default=None, init=False, repr=False)
    _nus: dict[str, LelongEstimate] | None = field(default=None, init=False, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False)

    @cached_property
    def entries(self) -> list[CatalogEntry]:
        return catalog_entries(self.setting)

    @cached_property
    def currents(self) -> dict[str, CurrentEntry]:
        return {entry.name: entry for entry in catalog_currents(self.setting)}

    def center(self, entry: CatalogEntry) -> list[complex]:
        """The entry's recorded pole, or the origin."""
        if entry.facts.pole is None:
            return [0j] * self.setting.n
        return list(entry.facts.pole)

    def mean_reports(self) -> dict[str, MeanValueReport]:
        with self._lock:
            if self._means is None:
                self._means = {
                    entry.name: mean_value_ratios(
                        self.setting,
                        entry.function,
                        self.center(entry),
                        self.config,
                        self.lelong_config,
                        self.kappa,
                    )
                    for entry in self.entries
                }
            return self._means

    def sup_reports(self) -> dict[str, SupGrowthReport]:
        with self._lock:
            if self._sups is None:
                self._sups = {
                    entry.name: sup_growth(
                        self.setting,
                        entry.function,
                        self.center(entry),
                        self.config,
                        self.lelong_config,
                        self.kappa,
                    )
                    for entry in self.entries
                }
            return self._sups

    def lelong_estimates(self) -> dict[str, LelongEstimate]:
        """Definition-extrapolation Lelong numbers of dd^c u for every entry."""
        with self._lock:
            if self._nus is None:
                self._nus = {
                    entry.name: lelong_number(
                        closed_current(self.setting, entry.function),
                        self.center(entry),
                        self.config,
                        self.lelong_config,
                    )[0]
                    for entry in self.entries
                }
            return self._nus


CheckFunction = Callable[[CheckContext], Outcome]


@dataclass(frozen=True)
class Check:
    """A registered check."""

    id: str
    reference: str
    run: CheckFunction


_REGISTRY: dict[str, Check] = {}


def register(check_id: str, reference: str) -> Callable[[CheckFunction], CheckFunction]:
    """Register a check function under ``check_id``; ids must be unique."""

    def decorator(function: CheckFunction) -> CheckFunction:
        if check_id in _REGISTRY:
            raise ValueError(f"Check '{check_id}' is already registered")
        _REGISTRY[check_id] = Check(id=check_id, reference=reference, run=function)
        return function

    return decorator


def registered_checks(selected: tuple[str, ...] | list[str] = ()) -> list[Check]:
    """
    Registered checks ordered by id, optionally restricted to ``selected``.

    Raises:
        UnknownCheckError: If a selected id is not registered.
    """
    unknown = sorted(set(selected) - set(_REGISTRY))
    if unknown:
        raise UnknownCheckError(
            f"Unknown check id(s): {', '.join(unknown)}. "
            f"Known: {', '.join(sorted(_REGISTRY))}"
        )
    ids = sorted(selected) if selected else sorted(_REGISTRY)
    return [_REGISTRY[check_id] for check_id in ids]
