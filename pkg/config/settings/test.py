"""
Test settings for the Hessian Lelong laboratory.

These settings are used when running pytest.
"""

from .base import *  # noqa: F401, F403

# =============================================================================
# Debug Settings
# =============================================================================

DEBUG = False

# =============================================================================
# Numerics - Smaller Monte Carlo Budgets for Fast Tests
# =============================================================================

LAB["SAMPLES_PER_SHELL"] = 4_000  # noqa: F405
LAB["MC_SHELLS"] = 16  # noqa: F405
LAB["PROFILE_POINTS"] = 16  # noqa: F405
LAB["SCAN_ANGULAR_SAMPLES"] = 128  # noqa: F405
LAB["MAP_POINTS_PER_AXIS"] = 3  # noqa: F405
LAB["WORKERS"] = 1  # noqa: F405

# =============================================================================
# Logging - Minimal for Tests
# =============================================================================

LOGGING = {
    "version": 1,
    "disable_existing_loggers": True,
    "handlers": {
        "null": {
            "class": "logging.NullHandler",
        },
    },
    "root": {
        "handlers": ["null"],
        "level": "DEBUG",
    },
}
