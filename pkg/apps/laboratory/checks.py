"""
The numbered checks of the verification suite.

Each check compares computed quantities with closed forms or with the
structural properties of the catalog. Status ``finding`` marks results
that are expected to deviate from a naive reading (currents without a
Lelong number, the calibration constant, the gap between the supremum
growth and the Lelong number).
"""

import itertools
import logging
import math

import numpy as np
from django.conf import settings

from apps.core.utils import relative_difference
from services.catalog import (
    Profile,
    catalog_entry,
    certified_m_positive,
    closed_current,
    fundamental_solution,
    radial,
)
from services.exponent import (
    CompactRegion,
    bounds_report,
    compact_infimum,
    integrability_exponent,
    markov_bound,
    tail_exponent,
)
from services.hermitian import Setting
from services.integrate import ball_current_mass
from services.lelong import (
    DOES_NOT_CONVERGE,
    green_identity,
    lelong_function,
    lelong_jensen,
    lelong_map,
    lelong_number,
    lower_bound_at_finite_points,
    negative_current_check,
    point_mass,
    residual_scale,
)

from .registry import CheckContext, Outcome, register, tolerance
from .schemas import CheckStatus

logger = logging.getLogger(__name__)

STANDARD_PAIRS = ((2, 1), (3, 2), (4, 2), (4, 3))
CALIBRATION_DIMENSIONS = (2, 3, 4)
CALIBRATION_RADII = (0.1, 0.5, 1.0)
JENSEN_CURRENTS = ("ddc-quad", "ddc-fund", "mild-coefficient", "jensen-nonclosed")
JENSEN_RADII = (0.1, 0.4)
T0_WINDOW = (1e-3, 1e-2)
T0_POINTS = 8
NEGATIVE_R0 = 0.5
MAP_SPACING = 0.05
MAP_SAMPLE_DIVISOR = 10
EXPONENT_RADIUS = 0.5
INFIMUM_CENTER = 0.3
INFIMUM_RADIUS = 0.45
DETERMINISM_RADIUS = 0.75
GREEN_RADII = (0.05, 0.3)
SUB_MEAN_OFFSET = 0.2
MARKOV_FRACTION = 0.5


def _origin(n: int) -> list[complex]:
    return [0j] * n


def _on_axis(n: int, x: float) -> list[complex]:
    return [complex(x)] + [0j] * (n - 1)


def _summary(failures: list[str], passed: str) -> str:
    return "; ".join(failures) if failures else passed


@register("01-calibration", "ball masses of beta^n equal r^(2n)")
def calibration(context: CheckContext) -> Outcome:
    """Radial quadrature to 1e-6 and sampling within its error bars."""
    tol = tolerance("CALIBRATION", 1e-6)
    sigma = context.lelong_config.sigma
    sampled = context.config.with_overrides(prefer_radial=False)
    worst, failures = 0.0, []
    for n in CALIBRATION_DIMENSIONS:
        beta = closed_current(Setting(n=n, m=1), radial(Profile.affine(), n))
        for r in CALIBRATION_RADII:
            exact = r ** (2 * n)
            quadrature = ball_current_mass(beta, _origin(n), r, context.config)
            error = relative_difference(quadrature.value, exact)
            worst = max(worst, error)
            if error >= tol:
                failures.append(f"radial n={n} r={r}: relative error {error:.3g}")
            estimate = ball_current_mass(beta, _origin(n), r, sampled)
            if abs(estimate.value - exact) > sigma * estimate.stderr + tol * exact:
                failures.append(
                    f"sampled n={n} r={r}: {estimate.value:.12g} +- {estimate.stderr:.3g}"
                )
    return Outcome.verdict(
        not failures,
        value=worst,
        expected=0.0,
        tolerance=tol,
        diagnostics=_summary(failures, "radial and sampled masses agree with r^(2n)"),
    )


@register("02-fundamental", "fundamental solution: unit Lelong number and unit Hessian atom")
def fundamental(context: CheckContext) -> Outcome:
    lelong_tol = context.lelong_config.lelong_tolerance
    atom_tol = context.lelong_config.atom_tolerance
    worst, failures = 0.0, []
    for n, m in STANDARD_PAIRS:
        setting = Setting(n=n, m=m)
        report = point_mass(
            setting,
            fundamental_solution(setting),
            _origin(n),
            context.config,
            context.lelong_config,
        )
        if not isinstance(report.nu, float) or report.atom is None:
            failures.append(f"(n={n}, m={m}): nu={report.nu}, atom={report.atom}")
            continue
        worst = max(worst, abs(report.nu - 1.0))
        if abs(report.nu - 1.0) >= lelong_tol:
            failures.append(f"(n={n}, m={m}): nu={report.nu:.12g}")
        if abs(report.atom - 1.0) >= atom_tol:
            failures.append(f"(n={n}, m={m}): atom={report.atom:.12g}")
    return Outcome.verdict(
        not failures,
        value=worst,
        expected=0.0,
        tolerance=lelong_tol,
        diagnostics=_summary(failures, "nu = atom = 1 on every pair"),
    )


@register("03-monotonicity", "m-Lelong functions of m-positive closed currents are nondecreasing")
def monotonicity(context: CheckContext) -> Outcome:
    n = context.setting.n
    profiles = [
        (entry.name, entry.current, _origin(n))
        for entry in context.currents.values()
        if "certified" in entry.tags
    ]
    for entry in context.entries:
        current = closed_current(context.setting, entry.function)
        if certified_m_positive(current):
            profiles.append((f"ddc {entry.name}", current, context.center(entry)))

    failures = []
    for name, current, center in profiles:
        estimate, _ = lelong_number(
            current, center, context.config, context.lelong_config, certified=True
        )
        if estimate.monotone is not True:
            failures.append(name)
    return Outcome.verdict(
        not failures,
        value=float(len(profiles) - len(failures)),
        expected=float(len(profiles)),
        tolerance=context.lelong_config.sigma,
        diagnostics=_summary(
            [f"not nondecreasing: {', '.join(failures)}"] if failures else [],
            f"{len(profiles)} certified profiles nondecreasing",
        ),
    )


@register("04-jensen", "Lelong-Jensen identity")
def jensen(context: CheckContext) -> Outcome:
    tol = tolerance("JENSEN", 1e-2)
    sigma = context.lelong_config.sigma
    r1, r2 = JENSEN_RADII
    worst, failures = 0.0, []
    for name in JENSEN_CURRENTS:
        report = lelong_jensen(
            context.currents[name].current, _origin(context.setting.n), r1, r2, context.config
        )
        worst = max(worst, report.residual)
        scale = residual_scale(
            report.lhs, report.first_term, report.second_term, report.annulus_term
        )
        allowance = tol + sigma * report.stderr / scale
        if report.residual >= allowance:
            failures.append(f"{name}: residual {report.residual:.3g}")
    return Outcome.verdict(
        not failures,
        value=worst,
        expected=0.0,
        tolerance=tol,
        diagnostics=_summary(failures, f"{len(JENSEN_CURRENTS)} currents balance"),
    )


@register("05-t0", "T0 current has no m-Lelong number")
def t0_divergence(context: CheckContext) -> Outcome:
    """nu(r) r^(2s) is a negative constant, so nu(r) has no finite limit."""
    tol = tolerance("T0_CONSTANCY", 0.01)
    setting = context.setting
    current = context.currents["t0"].current
    profile = lelong_function(
        current, _origin(setting.n), *T0_WINDOW, T0_POINTS, context.config
    )
    scaled = np.asarray(profile.values) * np.asarray(profile.radii) ** (2.0 * setting.power)
    constant = float(np.mean(scaled))
    spread = float(np.ptp(scaled)) / abs(constant) if constant else float("inf")
    estimate, _ = lelong_number(current, _origin(setting.n), context.config, context.lelong_config)

    expected_shape = spread <= tol and constant < 0 and estimate.nu == DOES_NOT_CONVERGE
    return Outcome(
        status=CheckStatus.FINDING if expected_shape else CheckStatus.FAIL,
        value=constant,
        expected=DOES_NOT_CONVERGE,
        tolerance=tol,
        diagnostics=(
            f"nu(r) r^(2s) = {constant:.12g} with relative spread {spread:.3g} on "
            f"[{T0_WINDOW[0]:g}, {T0_WINDOW[1]:g}]; limit: {estimate.nu}"
        ),
    )


@register("06-negative-currents", "convergence of the mild-coefficient negative current")
def negative_currents(context: CheckContext) -> Outcome:
    entry = context.currents["mild-coefficient"]
    report = negative_current_check(
        entry.current,
        _origin(context.setting.n),
        NEGATIVE_R0,
        context.config,
        context.lelong_config,
    )
    tol = context.lelong_config.lelong_tolerance
    expected = float(entry.expected_nu)
    converged = report.converged and report.limit is not None
    ok = (
        converged
        and report.bound_holds
        and report.g_nonincreasing
        and abs(report.limit - expected) <= tol
    )
    return Outcome.verdict(
        ok,
        value=report.limit,
        expected=expected,
        tolerance=tol,
        diagnostics=(
            f"lower bound holds: {report.bound_holds}; corrected profile nonincreasing: "
            f"{report.g_nonincreasing}; kernel exponent {report.kernel_exponent}"
        ),
    )


@register("06-t0-lower-bound", "lower bound for negative currents on T0")
def t0_lower_bound(context: CheckContext) -> Outcome:
    """The bound fails on T0 because Upsilon(r) = -r^(-2s) decreases to -inf."""
    report = negative_current_check(
        context.currents["t0"].current,
        _origin(context.setting.n),
        NEGATIVE_R0,
        context.config,
        context.lelong_config,
    )
    violated = sum(1 for ok in report.bound_satisfied if not ok)
    expected_shape = not report.bound_holds and not report.kernel_integrable
    return Outcome(
        status=CheckStatus.FINDING if expected_shape else CheckStatus.FAIL,
        value=float(min(report.upsilon)),
        expected=None,
        tolerance=context.lelong_config.lelong_tolerance,
        diagnostics=(
            f"bound fails at {violated} of {len(report.radii)} radii; kernel exponent "
            f"{report.kernel_exponent}"
        ),
    )


@register("07-kappa", "calibration constant between mean values and Lelong numbers")
def kappa(context: CheckContext) -> Outcome:
    tol = tolerance("KAPPA", 1e-3)
    if context.kappa is None:
        return Outcome(CheckStatus.FAIL, diagnostics="calibration did not converge")
    reports = context.mean_reports()
    per_entry = {}
    for entry in context.entries:
        nu = entry.facts.lelong_at_pole
        sphere = reports[entry.name].sphere_limit
        if not nu or not sphere.converged or float(sphere.nu) == 0:
            continue
        per_entry[entry.name] = nu / float(sphere.nu)
    spread = max((abs(k - context.kappa) for k in per_entry.values()), default=0.0)
    listing = ", ".join(f"{name}={value:.6g}" for name, value in per_entry.items())
    return Outcome(
        status=CheckStatus.FINDING if spread <= tol else CheckStatus.FAIL,
        value=context.kappa,
        expected=None,
        tolerance=tol,
        diagnostics=f"largest deviation {spread:.3g}; per entry: {listing}",
    )


@register("07-nu-agreement", "definition and mean-value Lelong numbers agree")
def nu_agreement(context: CheckContext) -> Outcome:
    """Extrapolated nu_T(a, r) against kappa times the sphere-mean limit, per entry."""
    tol = tolerance("NU_AGREEMENT", 1e-2)
    if context.kappa is None:
        return Outcome(CheckStatus.FAIL, diagnostics="calibration did not converge")
    sigma = context.lelong_config.sigma
    estimates, means = context.lelong_estimates(), context.mean_reports()
    worst, failures = 0.0, []
    for entry in context.entries:
        estimate, mean = estimates[entry.name], means[entry.name]
        if not estimate.converged and mean.calibrated_nu is None:
            continue
        if not estimate.converged or mean.calibrated_nu is None:
            failures.append(
                f"{entry.name}: definition nu={estimate.nu}, mean-value nu={mean.calibrated_nu}"
            )
            continue
        gap = abs(float(estimate.nu) - mean.calibrated_nu)
        stderr = math.hypot(estimate.stderr, mean.kappa * mean.sphere_limit.stderr)
        worst = max(worst, gap)
        if gap > max(tol, sigma * stderr):
            failures.append(
                f"{entry.name}: definition {float(estimate.nu):.6g} vs "
                f"mean-value {mean.calibrated_nu:.6g}"
            )
    return Outcome.verdict(
        not failures,
        value=worst,
        expected=0.0,
        tolerance=tol,
        diagnostics=_summary(failures, f"{len(context.entries)} entries agree"),
    )


@register("07-ratio-law", "ball-to-sphere mean ratio n/(n+1-n/m)")
def ratio_law(context: CheckContext) -> Outcome:
    tol = tolerance("RATIO", 1e-2)
    bounded_tol = tolerance("BOUNDED", 1e-6)
    expected = context.setting.ratio_law
    reports = context.mean_reports()
    worst, failures = 0.0, []
    for entry in context.entries:
        report = reports[entry.name]
        if entry.facts.bounded:
            nu = report.sphere_limit.nu
            if not isinstance(nu, float) or abs(nu) >= bounded_tol:
                failures.append(f"{entry.name}: bounded entry has nu={nu}")
        elif entry.facts.lelong_at_pole:
            if report.ratio is None:
                failures.append(f"{entry.name}: no ratio")
                continue
            error = relative_difference(report.ratio, expected)
            worst = max(worst, error)
            if error > tol:
                failures.append(f"{entry.name}: ratio {report.ratio:.8g}")
    return Outcome.verdict(
        not failures,
        value=worst,
        expected=0.0,
        tolerance=tol,
        diagnostics=_summary(failures, f"expected ratio {expected:.12g}"),
    )


@register("08-convexity", "convexity of mean values and suprema in the weight coordinate")
def convexity_check(context: CheckContext) -> Outcome:
    """Sphere means and suprema are convex in phi_m(r); ell <= nu on every entry."""
    ell_tol = tolerance("ELL_NU", 1e-2)
    means, sups = context.mean_reports(), context.sup_reports()
    estimates = context.lelong_estimates()
    smallest, failures = float("inf"), []
    for entry in context.entries:
        mean, sup = means[entry.name], sups[entry.name]
        smallest = min(smallest, mean.min_second_difference)
        if not mean.sphere_convex:
            failures.append(f"{entry.name}: sphere means not convex")
        # Searched suprema are lower bounds and carry no convexity guarantee.
        if not sup.lower_bound:
            smallest = min(smallest, sup.min_second_difference)
            if not sup.convex:
                failures.append(f"{entry.name}: suprema not convex")
        nu = estimates[entry.name].nu
        if not isinstance(nu, float):
            failures.append(f"{entry.name}: no Lelong number")
        elif sup.calibrated is None or sup.calibrated > nu + ell_tol:
            failures.append(f"{entry.name}: ell={sup.calibrated} exceeds nu={nu}")
    return Outcome.verdict(
        not failures,
        value=smallest,
        expected=0.0,
        tolerance=context.lelong_config.convexity_tolerance,
        diagnostics=_summary(failures, "convex on every entry; ell <= nu"),
    )


@register("08-lelong-gap", "gap between the Lelong number and the supremum growth")
def lelong_gap(context: CheckContext) -> Outcome:
    sups, estimates = context.sup_reports(), context.lelong_estimates()
    gaps = {
        entry.name: float(estimates[entry.name].nu) - sups[entry.name].calibrated
        for entry in context.entries
        if sups[entry.name].calibrated is not None and estimates[entry.name].converged
    }
    if not gaps:
        return Outcome(CheckStatus.SKIPPED, diagnostics="no converged supremum growth")
    largest = max(gaps.values())
    listing = ", ".join(f"{name}={gap:.3g}" for name, gap in gaps.items())
    return Outcome(
        status=CheckStatus.FINDING,
        value=largest,
        expected=None,
        tolerance=tolerance("ELL_NU", 1e-2),
        diagnostics=f"nu - ell per entry: {listing}",
    )


@register("09-lelong-map", "Lelong map is the pole value at the pole and zero elsewhere")
def lelong_map_check(context: CheckContext) -> Outcome:
    """A cube of points in (Re z1, Im z1, Re z2) around the pole of the fundamental solution."""
    setting = context.setting
    tol = context.lelong_config.lelong_tolerance
    half = getattr(settings, "LAB", {}).get("MAP_POINTS_PER_AXIS", 9) // 2
    offsets = MAP_SPACING * np.arange(-half, half + 1)
    points = [
        [complex(x, y), complex(u)] + [0j] * (setting.n - 2)
        for x, y, u in itertools.product(offsets, repeat=3)
    ]
    pole_index = len(points) // 2
    config = context.config.with_overrides(
        samples_per_shell=max(2, context.config.samples_per_shell // MAP_SAMPLE_DIVISOR)
    )
    result = lelong_map(
        setting,
        fundamental_solution(setting),
        points,
        config,
        context.lelong_config,
        context.kappa,
    )

    failures = list(result.usc_violations)
    at_pole = result.entries[pole_index].nu
    if not isinstance(at_pole, float) or abs(at_pole - 1.0) >= tol:
        failures.append(f"nu at the pole is {at_pole}")
    elsewhere = [e for i, e in enumerate(result.entries) if i != pole_index]
    stray = [e for e in elsewhere if not isinstance(e.nu, float) or abs(e.nu) >= tol]
    if stray:
        failures.append(f"{len(stray)} off-pole points with nu >= {tol:g}")
    largest = max((abs(e.nu) for e in elsewhere if isinstance(e.nu, float)), default=0.0)
    return Outcome.verdict(
        not failures and result.usc_holds,
        value=largest,
        expected=0.0,
        tolerance=tol,
        diagnostics=_summary(failures, f"{len(points)} points; spot check passed"),
    )


@register("10-exponent-agreement", "tail-slope and integral-scan exponents agree")
def exponent_agreement(context: CheckContext) -> Outcome:
    tol = context.exponent_config.tolerance
    cases = []
    for n, m in STANDARD_PAIRS:
        setting = Setting(n=n, m=m)
        function = fundamental_solution(setting)
        cases.append((f"fund (n={n}, m={m})", n, function, setting.exponent_upper))
    cylinder = catalog_entry(Setting(n=4, m=2), "cylinder")
    cases.append(("cylinder (n=4, m=2)", 4, cylinder.function, float(cylinder.facts.iota_at_pole)))

    worst, failures = 0.0, []
    for name, n, function, expected in cases:
        region = CompactRegion.ball(_origin(n), EXPONENT_RADIUS)
        tail = tail_exponent(function, region, context.config, context.exponent_config)
        scan = integrability_exponent(function, region, context.config, context.exponent_config)
        if not isinstance(tail.alpha, float) or not scan.bounded:
            failures.append(f"{name}: tail {tail.alpha}, scan {scan.iota}")
            continue
        errors = (
            relative_difference(tail.alpha, expected),
            relative_difference(float(scan.iota), expected),
            relative_difference(tail.alpha, float(scan.iota)),
        )
        worst = max(worst, *errors)
        if max(errors) > tol:
            failures.append(f"{name}: tail {tail.alpha:.6g}, scan {float(scan.iota):.6g}")
    return Outcome.verdict(
        not failures,
        value=worst,
        expected=0.0,
        tolerance=tol,
        diagnostics=_summary(failures, f"{len(cases)} functions agree"),
    )


@register("11-exponent-bounds", "lower and upper bounds on the integrability exponent")
def exponent_bounds(context: CheckContext) -> Outcome:
    setting = context.setting
    failures = []
    checked = 0
    for entry in context.entries:
        if entry.facts.msh_max_order < setting.m:
            continue
        report = bounds_report(
            setting,
            entry.function,
            context.center(entry),
            context.config,
            context.lelong_config,
            context.exponent_config,
        )
        checked += 1
        if not report.holds:
            failures.append(f"{entry.name}: iota={report.iota.iota}, nu={report.nu}")

    subharmonic = Setting(n=setting.n, m=1)
    identity = bounds_report(
        subharmonic,
        fundamental_solution(subharmonic),
        _origin(setting.n),
        context.config,
        context.lelong_config,
        context.exponent_config,
    )
    if identity.m1_identity is not True:
        failures.append(f"m=1: iota={identity.iota.iota}, expected {identity.lower:.6g}")
    return Outcome.verdict(
        not failures,
        value=identity.iota.iota,
        expected=identity.lower,
        tolerance=context.exponent_config.tolerance,
        diagnostics=_summary(failures, f"{checked} m-sh entries within bounds"),
    )


@register("12-infimum-monotonicity", "infimum over poles and monotonicity of the exponent")
def infimum_monotonicity(context: CheckContext) -> Outcome:
    setting = context.setting
    n = setting.n
    tol = context.exponent_config.tolerance
    entry = catalog_entry(setting, "fund-plus-milder")
    fund = fundamental_solution(setting)
    region = CompactRegion.ball(_on_axis(n, INFIMUM_CENTER), INFIMUM_RADIUS)
    points = [list(pole) for pole, _ in entry.facts.pole_lelong]
    infimum = compact_infimum(
        entry.function, region, points, context.config, context.exponent_config
    )

    failures = []
    expected = setting.exponent_upper
    if not infimum.bounded or relative_difference(float(infimum.iota), expected) > tol:
        failures.append(f"infimum {infimum.iota}")
    if not infimum.consistent:
        failures.append("infimum disagrees with the whole-region exponent")

    ball = CompactRegion.ball(_origin(n), EXPONENT_RADIUS)
    pairs = [
        ("fund-plus-milder <= fund", entry.function, fund, region),
        ("2 fund <= fund", fund.scaled(2.0), fund, ball),
    ]
    for name, lower, upper, where in pairs:
        below = integrability_exponent(lower, where, context.config, context.exponent_config)
        above = integrability_exponent(upper, where, context.config, context.exponent_config)
        if below.interval is None or above.interval is None:
            failures.append(f"{name}: unbounded exponent")
        elif below.interval[0] > above.interval[1]:
            failures.append(f"{name}: {below.iota} above {above.iota}")
    return Outcome.verdict(
        not failures,
        value=infimum.iota,
        expected=expected,
        tolerance=tol,
        diagnostics=_summary(failures, "infimum at the stronger pole; both pairs ordered"),
    )


@register("13-determinism", "fixed seeds reproduce sampled results")
def determinism(context: CheckContext) -> Outcome:
    """Repeated and multi-worker runs of a sampled mass agree bit for bit."""
    entry = catalog_entry(context.setting, "two-pole")
    current = closed_current(context.setting, entry.function)
    origin = _origin(context.setting.n)
    runs = [
        ball_current_mass(current, origin, DETERMINISM_RADIUS, context.config),
        ball_current_mass(current, origin, DETERMINISM_RADIUS, context.config),
        ball_current_mass(
            current, origin, DETERMINISM_RADIUS, context.config.with_overrides(workers=2)
        ),
    ]
    identical = all(
        (run.value, run.stderr) == (runs[0].value, runs[0].stderr) for run in runs[1:]
    )
    return Outcome.verdict(
        identical,
        value=runs[0].value,
        expected=runs[0].value,
        tolerance=0.0,
        diagnostics=", ".join(f"{run.value!r}" for run in runs),
    )


@register("14-green-identity", "sphere-mean increments against integrated Lelong functions")
def green_identity_check(context: CheckContext) -> Outcome:
    tol = tolerance("KAPPA", 1e-3)
    setting = context.setting
    report = green_identity(
        setting, fundamental_solution(setting), _origin(setting.n), *GREEN_RADII, context.config
    )
    if context.kappa is None or report.constant is None:
        return Outcome(CheckStatus.FAIL, value=report.constant, diagnostics="no constant")
    ok = relative_difference(report.constant, context.kappa) <= tol
    return Outcome.verdict(
        ok,
        value=report.constant,
        expected=context.kappa,
        tolerance=tol,
        diagnostics=f"lambda increment {report.sphere_difference:.12g}",
    )


@register("15-sub-mean-value", "sphere means dominate finite values")
def sub_mean_value(context: CheckContext) -> Outcome:
    setting = context.setting
    bounded = catalog_entry(setting, "quad-shifted").function
    report = lower_bound_at_finite_points(
        bounded, _on_axis(setting.n, SUB_MEAN_OFFSET), context.config, context.lelong_config
    )
    at_pole = lower_bound_at_finite_points(
        fundamental_solution(setting), _origin(setting.n), context.config, context.lelong_config
    )
    return Outcome.verdict(
        report.applicable and report.satisfied and not at_pole.applicable,
        value=report.min_margin,
        expected=0.0,
        tolerance=0.0,
        diagnostics=f"value {report.value}; not applicable at the pole: {not at_pole.applicable}",
    )


@register("16-markov-bound", "Chebyshev-Markov bound on sublevel volumes")
def markov(context: CheckContext) -> Outcome:
    setting = context.setting
    alpha = MARKOV_FRACTION * setting.exponent_upper
    report = markov_bound(
        fundamental_solution(setting),
        CompactRegion.ball(_origin(setting.n), EXPONENT_RADIUS),
        alpha,
        context.config,
        context.exponent_config,
    )
    largest = max((value for _, value in report.rows), default=None)
    return Outcome.verdict(
        report.applicable and bool(report.holds),
        value=largest,
        expected=report.integral,
        tolerance=0.0,
        diagnostics=f"alpha={alpha:.6g} over {len(report.rows)} levels",
    )
