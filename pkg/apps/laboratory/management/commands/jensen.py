"""
Management command checking the Lelong-Jensen identity for a current.

Usage:
    python manage.py jensen --current "cur(coef=affine(c0=-1, c1=1), ddc=fund()^(m-1))"
    python manage.py jensen --fn "fund()" --r1 0.05 --r2 0.3 --negative
"""

from apps.laboratory.reporting import open_output, write_models
from services.lelong import lelong_jensen, negative_current_check

from ._common import LabCommand

DEFAULT_R1 = 0.1
DEFAULT_R2 = 0.4


class Command(LabCommand):
    """Both sides of the Lelong-Jensen identity on an annulus."""

    help = "Compares both sides of the Lelong-Jensen identity between two radii"

    def add_command_arguments(self, parser):
        """Add command arguments."""
        parser.add_argument(
            "--negative",
            action="store_true",
            help="Also run the negative-current analysis up to r2",
        )

    def run(self, options):
        """Evaluate the identity and write the report."""
        current = self.current(options)
        center = self.center(options)
        r1 = options["r1"] if options["r1"] is not None else DEFAULT_R1
        r2 = options["r2"] if options["r2"] is not None else DEFAULT_R2
        config = self.run_config.mc_config()
        report = lelong_jensen(current, center, r1, r2, config)
        results = {"jensen": report}
        if options["negative"]:
            results["negative"] = negative_current_check(
                current, center, r2, config, self.lelong_config(options)
            )
        with open_output(self.run_config.out, self.stdout) as stream:
            write_models(results, self.fmt, stream)
        self.summary(f"Lelong-Jensen residual: {report.residual:.3g}")
