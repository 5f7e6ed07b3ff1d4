"""Laboratory app configuration."""

from django.apps import AppConfig


class LaboratoryConfig(AppConfig):
    """Configuration for the laboratory application."""

    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.laboratory"
    verbose_name = "Laboratory"
