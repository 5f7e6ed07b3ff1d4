"""
Suite runner.

Builds the shared context, runs the selected checks (concurrently when
more than one worker is configured) and assembles the report in check-id
order.
"""

import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor

from apps.core.exceptions import ComputationError, LabException
from services.lelong import calibration_constant

from . import checks  # noqa: F401  (registers the checks)
from .registry import Check, CheckContext, Outcome, registered_checks
from .schemas import CheckResult, CheckStatus, Number, Report, RunConfig, SettingSummary

logger = logging.getLogger(__name__)


def _plain(value: Number) -> Number:
    """Plain float or sentinel; non-finite values become None."""
    if value is None or isinstance(value, str):
        return value
    value = float(value)
    return value if math.isfinite(value) else None


def build_context(run_config: RunConfig) -> CheckContext:
    """
    Context for a run, with the calibration constant computed up front.

    A calibration that does not converge leaves ``kappa`` unset; the checks
    that need it then fail individually.
    """
    setting = run_config.setting
    config = run_config.mc_config()
    lelong_config = run_config.lelong_config()
    try:
        kappa = calibration_constant(setting, config, lelong_config)
    except ComputationError as e:
        logger.warning(f"Calibration failed for (n={setting.n}, m={setting.m}): {e.message}")
        kappa = None
    return CheckContext(
        setting=setting,
        config=config,
        lelong_config=lelong_config,
        exponent_config=run_config.exponent_config(),
        kappa=kappa,
    )


def run_check(check: Check, context: CheckContext) -> CheckResult:
    """Run one check; laboratory errors become a failing result."""
    started = time.perf_counter()
    try:
        outcome = check.run(context)
    except LabException as e:
        logger.error(f"Check {check.id} raised {type(e).__name__}: {e.message}")
        outcome = Outcome(CheckStatus.FAIL, diagnostics=f"{type(e).__name__}: {e.message}")
    elapsed = time.perf_counter() - started
    logger.info(f"Check {check.id}: {outcome.status.value} ({elapsed:.1f}s)")
    return CheckResult(
        id=check.id,
        reference=check.reference,
        status=outcome.status,
        value=_plain(outcome.value),
        expected=_plain(outcome.expected),
        tolerance=_plain(outcome.tolerance),
        diagnostics=outcome.diagnostics,
    )


def run_suite(run_config: RunConfig) -> Report:
    """
    Run the verification suite.

    Args:
        run_config: Validated run configuration.

    Returns:
        Report with one result per selected check, ordered by id.

    Raises:
        UnknownCheckError: If the configuration selects an unknown check.
    """
    selected = registered_checks(run_config.checks)
    context = build_context(run_config)
    logger.info(
        f"Running {len(selected)} checks for (n={run_config.n}, m={run_config.m}), "
        f"seed {run_config.seed}, {run_config.samples} samples per shell"
    )
    if run_config.workers > 1:
        with ThreadPoolExecutor(max_workers=run_config.workers) as pool:
            results = list(pool.map(lambda check: run_check(check, context), selected))
    else:
        results = [run_check(check, context) for check in selected]

    report = Report(
        setting=SettingSummary(n=run_config.n, m=run_config.m),
        seed=run_config.seed,
        kappa=context.kappa,
        checks=sorted(results, key=lambda result: result.id),
    )
    logger.info(f"Suite finished: {report.counts()}")
    return report
