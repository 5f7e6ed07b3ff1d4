"""
Django applications of the Hessian Lelong laboratory.

- core: Shared exceptions and helpers (plain package, not an installed app)
- laboratory: Verification suite, reporting and the management commands
"""
