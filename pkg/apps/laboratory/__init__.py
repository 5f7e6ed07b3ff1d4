"""
Laboratory application.

Runs the verification suite over the catalog, assembles reports and
exposes the single computations as management commands.
"""

default_app_config = "apps.laboratory.apps.LaboratoryConfig"
