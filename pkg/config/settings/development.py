"""
Development settings for the Hessian Lelong laboratory.

These settings are for local runs of the management commands.
"""

from decouple import config

from .base import *  # noqa: F401, F403

# =============================================================================
# Debug Settings
# =============================================================================

DEBUG = True

# =============================================================================
# Numerics - Development
# =============================================================================

LAB["WORKERS"] = config("LAB_WORKERS", default=2, cast=int)  # noqa: F405

# =============================================================================
# Logging - More Verbose for Development
# =============================================================================

LOGGING["loggers"]["apps"]["level"] = config("LAB_LOG_LEVEL", default="DEBUG")  # noqa: F405
LOGGING["loggers"]["services"]["level"] = config("LAB_LOG_LEVEL", default="DEBUG")  # noqa: F405
