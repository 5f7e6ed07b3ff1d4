"""
Core package for the laboratory.

Provides the exception hierarchy and the small numeric helpers shared
by the services and the management commands.
"""
