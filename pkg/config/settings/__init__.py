"""
Django settings package for the Hessian Lelong laboratory.

Settings are split into:
- base.py: Shared settings, including the LAB numerics dict
- development.py: Local command-line runs
- test.py: Test-specific settings (small Monte Carlo budgets)

Set DJANGO_SETTINGS_MODULE environment variable to use the appropriate settings:
- config.settings.development (default)
- config.settings.test
"""
