"""
Management command listing the model-function and current catalogs.

Usage:
    python manage.py catalog --n 4 --m 2
    python manage.py catalog --format json
"""

import json

from apps.laboratory.reporting import open_output, write_rows
from apps.laboratory.schemas import ReportFormat
from services.catalog import catalog_currents, catalog_entries, render

from ._common import LabCommand

CATALOG_COLUMNS = (
    "kind",
    "name",
    "spec",
    "provenance",
    "lelong",
    "iota",
    "msh_max_order",
    "bounded",
    "tags",
    "description",
)


class Command(LabCommand):
    """List catalog entries with their known facts and provenance."""

    help = "Lists the catalog functions and currents with their known facts"
    default_format = ReportFormat.CSV

    def run(self, options):
        """Write the catalog."""
        setting = self.run_config.setting
        rows = [
            {
                "kind": "function",
                "name": entry.name,
                "spec": render(entry.function),
                "provenance": entry.provenance.value,
                "lelong": entry.facts.lelong_at_pole,
                "iota": entry.facts.iota_at_pole,
                "msh_max_order": entry.facts.msh_max_order,
                "bounded": entry.facts.bounded,
                "tags": "",
                "description": entry.description,
            }
            for entry in catalog_entries(setting)
        ]
        rows += [
            {
                "kind": "current",
                "name": entry.name,
                "spec": render(entry.current),
                "provenance": entry.provenance.value,
                "lelong": entry.expected_nu,
                "iota": None,
                "msh_max_order": None,
                "bounded": None,
                "tags": " ".join(entry.tags),
                "description": entry.description,
            }
            for entry in catalog_currents(setting)
        ]
        with open_output(self.run_config.out, self.stdout) as stream:
            if self.fmt is ReportFormat.JSON:
                stream.write(json.dumps(rows, indent=2) + "\n")
            else:
                write_rows(
                    CATALOG_COLUMNS, ([row[c] for c in CATALOG_COLUMNS] for row in rows), stream
                )
        self.summary(f"{len(rows)} catalog entries for (n={setting.n}, m={setting.m})")
