"""
Management command for mean-value ratios and supremum growth.

Usage:
    python manage.py sup --fn "fund()"
    python manage.py sup --n 4 --m 2 --fn "cyl(s=0.5, k=3)" --format csv
"""

from apps.laboratory.reporting import open_output, write_models
from services.lelong import calibration_constant, mean_value_ratios, sup_growth

from ._common import LabCommand


class Command(LabCommand):
    """Growth of sphere means, ball means and ball suprema against the weight."""

    help = "Computes mean-value ratios and the supremum growth of a function"

    def run(self, options):
        """Compute both reports and write them."""
        setting = self.run_config.setting
        function = self.function(options)
        center = self.center(options)
        config = self.run_config.mc_config()
        lelong_config = self.lelong_config(options)
        kappa = calibration_constant(setting, config, lelong_config)
        sup = sup_growth(setting, function, center, config, lelong_config, kappa)
        means = mean_value_ratios(setting, function, center, config, lelong_config, kappa)
        with open_output(self.run_config.out, self.stdout) as stream:
            write_models({"sup": sup, "means": means}, self.fmt, stream)
        self.summary(
            f"Supremum growth {sup.calibrated}, sphere-mean number {means.calibrated_nu}, "
            f"ratio {means.ratio}"
        )
