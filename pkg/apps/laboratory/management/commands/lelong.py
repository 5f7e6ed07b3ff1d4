"""
Management command computing the m-Lelong function and number of a current.

Usage:
    python manage.py lelong --n 3 --m 2 --fn "fund()" --out profile.csv
    python manage.py lelong --current "cur(coef=1, ddc=fund()^(1))" --format json
"""

from apps.laboratory.reporting import open_output, write_models
from apps.laboratory.schemas import ReportFormat
from services.lelong import lelong_number, write_profile_csv

from ._common import LabCommand


class Command(LabCommand):
    """Profile and extrapolated Lelong number of a simple current."""

    help = "Computes the m-Lelong function of a current and its limit at r -> 0"
    default_format = ReportFormat.CSV

    def run(self, options):
        """Compute the profile and write it."""
        current = self.current(options)
        estimate, profile = lelong_number(
            current,
            self.center(options),
            self.run_config.mc_config(),
            self.lelong_config(options),
        )
        with open_output(self.run_config.out, self.stdout) as stream:
            if self.fmt is ReportFormat.CSV:
                write_profile_csv(profile, stream)
            else:
                write_models({"estimate": estimate, "profile": profile}, self.fmt, stream)
        self.summary(f"Lelong number: {estimate.nu} (stderr {estimate.stderr:.3g})")
