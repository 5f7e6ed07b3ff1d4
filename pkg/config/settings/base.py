"""
Base Django settings for the Hessian Lelong laboratory.

Contains settings shared across all environments.
Environment-specific settings should go in development.py or test.py.
"""

from pathlib import Path

from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent.parent

# =============================================================================
# Core Django Settings
# =============================================================================

SECRET_KEY = config("SECRET_KEY", default="lab-insecure-key-not-for-web-use")

DEBUG = config("DEBUG", default=False, cast=bool)

ALLOWED_HOSTS: list[str] = []

# =============================================================================
# Application Definition
# =============================================================================

DJANGO_APPS: list[str] = []

LOCAL_APPS = [
    "apps.laboratory",
]

INSTALLED_APPS = DJANGO_APPS + LOCAL_APPS

# No database: every computation is in memory.
DATABASES: dict = {}

# =============================================================================
# Internationalisation
# =============================================================================

LANGUAGE_CODE = "en-gb"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True

# =============================================================================
# Default (n, m) Setting
# =============================================================================

LAB_SETTING = {
    "N": config("LAB_N", default=3, cast=int),
    "M": config("LAB_M", default=2, cast=int),
}

# =============================================================================
# Laboratory Numerics
# =============================================================================

LAB = {
    "SEED": config("LAB_SEED", default=42, cast=int),
    "SAMPLES_PER_SHELL": config("LAB_SAMPLES", default=200_000, cast=int),
    "MC_SHELLS": config("LAB_MC_SHELLS", default=24, cast=int),
    "SHELL_RATIO": config("LAB_SHELL_RATIO", default=1.2, cast=float),
    "RADIAL_INNER_FRACTION": config("LAB_RADIAL_INNER", default=1e-7, cast=float),
    "CHUNK_SIZE": config("LAB_CHUNK_SIZE", default=20_000, cast=int),
    "WORKERS": config("LAB_WORKERS", default=1, cast=int),
    "PROFILE_POINTS": config("LAB_PROFILE_POINTS", default=32, cast=int),
    "R_MIN": config("LAB_R_MIN", default=1e-4, cast=float),
    "R_MAX": config("LAB_R_MAX", default=0.5, cast=float),
    "MAP_POINTS_PER_AXIS": config("LAB_MAP_POINTS", default=9, cast=int),
    "SCAN_ANGULAR_SAMPLES": config("LAB_SCAN_SAMPLES", default=512, cast=int),
    "TOLERANCES": {
        "CALIBRATION": 1e-6,
        "LELONG": 1e-3,
        "ATOM": 1e-2,
        "JENSEN": 1e-2,
        "RATIO": 1e-2,
        "CONVEXITY": 1e-9,
        "KAPPA": 1e-3,
        "EXPONENT": 0.05,
        "T0_CONSTANCY": 0.01,
        "USC": 1e-3,
        "BOUNDED": 1e-6,
        "ELL_NU": 1e-2,
        "NU_AGREEMENT": 1e-2,
        "SIGMA": 3.0,
    },
}

# =============================================================================
# Logging Configuration
# =============================================================================

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{levelname} {asctime} {module} {process:d} {thread:d} {message}",
            "style": "{",
        },
        "simple": {
            "format": "{levelname} {asctime} {module} {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "simple",
        },
    },
    "root": {
        "handlers": ["console"],
        "level": "WARNING",
    },
    "loggers": {
        "django": {
            "handlers": ["console"],
            "level": config("DJANGO_LOG_LEVEL", default="WARNING"),
            "propagate": False,
        },
        "apps": {
            "handlers": ["console"],
            "level": config("LAB_LOG_LEVEL", default="INFO"),
            "propagate": False,
        },
        "services": {
            "handlers": ["console"],
            "level": config("LAB_LOG_LEVEL", default="INFO"),
            "propagate": False,
        },
    },
}
