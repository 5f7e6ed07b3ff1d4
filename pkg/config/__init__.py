"""
Laboratory configuration package.

This package contains the Django settings modules.
"""
