"""
Management command running the verification suite.

Exits with status 0 when no check fails, 1 when a check fails and 2 on
configuration errors.

Usage:
    python manage.py verify
    python manage.py verify --n 2 --m 1 --checks 01-calibration,02-fundamental --out report.json
"""

from django.core.management.base import CommandError

from apps.laboratory.reporting import emit_report
from apps.laboratory.runner import run_suite

from ._common import LabCommand


class Command(LabCommand):
    """Run the numbered checks and write the report."""

    help = "Runs the verification suite and writes a JSON or CSV report"

    def add_command_arguments(self, parser):
        """Add command arguments."""
        parser.add_argument(
            "--checks",
            help="Comma-separated check ids (all checks when omitted)",
        )
        parser.add_argument("--workers", type=int, help="Checks run concurrently")

    def config_options(self, options) -> dict:
        return {"checks": options["checks"], "workers": options["workers"]}

    def run(self, options):
        """Run the suite and write the report."""
        report = run_suite(self.run_config)
        emit_report(report, self.fmt, self.run_config.out, self.stdout)
        counts = ", ".join(f"{count} {status}" for status, count in report.counts().items())
        self.summary(f"Verification suite: {counts}")
        if report.failed:
            failed = [check.id for check in report.checks if check.failed]
            raise CommandError(f"Failed checks: {', '.join(failed)}", returncode=1)
