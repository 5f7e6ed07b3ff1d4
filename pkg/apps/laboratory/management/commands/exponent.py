"""
Management command estimating the integrability exponent of a function.

Usage:
    python manage.py exponent --n 4 --m 2 --fn "cyl(s=0.5, k=3)"
    python manage.py exponent --fn "fund()" --radius 0.25 --bounds --format json
"""

from apps.laboratory.reporting import open_output, write_models, write_rows
from apps.laboratory.schemas import ReportFormat
from services.exponent import (
    CompactRegion,
    bounds_report,
    integrability_exponent,
    tail_exponent,
)

from ._common import LabCommand

VOLUME_COLUMNS = ("t", "volume", "stderr", "method")


class Command(LabCommand):
    """Tail-slope and integral-scan exponents over a ball."""

    help = "Estimates the integrability exponent of a function over a ball"

    def add_command_arguments(self, parser):
        """Add command arguments."""
        parser.add_argument(
            "--radius", type=float, default=0.5, help="Radius of the ball K (default 0.5)"
        )
        parser.add_argument(
            "--bounds",
            action="store_true",
            help="Also check the exponent bounds at the center",
        )

    def run(self, options):
        """Estimate the exponent and write the results."""
        function = self.function(options)
        center = self.center(options)
        region = CompactRegion.ball(center, options["radius"])
        config = self.run_config.mc_config()
        tail = tail_exponent(function, region, config)
        scan = integrability_exponent(function, region, config)
        results = {"tail": tail, "scan": scan}
        if options["bounds"]:
            results["bounds"] = bounds_report(
                self.run_config.setting,
                function,
                center,
                config,
                self.lelong_config(options),
            )

        with open_output(self.run_config.out, self.stdout) as stream:
            if self.fmt is ReportFormat.CSV:
                write_rows(
                    VOLUME_COLUMNS,
                    ((v.t, v.volume, v.stderr, v.method.value) for v in tail.volumes),
                    stream,
                )
            else:
                write_models(results, self.fmt, stream)
        self.summary(f"Exponent: tail {tail.alpha}, scan {scan.iota}")
