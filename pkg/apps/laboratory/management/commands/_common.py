"""
Options and error handling shared by the laboratory commands.

Every command accepts the same setting, function, radius and sampling options;
laboratory errors leave the command with exit code 2.
"""

from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from apps.core.exceptions import LabException, ValidationError
from apps.laboratory.schemas import ReportFormat, RunConfig
from services.catalog import (
    ModelFunction,
    SimpleCurrent,
    as_point,
    closed_current,
    parse_function_spec,
    point_from_reals,
)
from services.lelong import LelongConfig


class LabCommand(BaseCommand):
    """Base class for the laboratory commands."""

    default_format = ReportFormat.JSON

    def add_arguments(self, parser):
        """Add command arguments."""
        parser.add_argument("--n", type=int, help="Complex dimension (default from settings)")
        parser.add_argument("--m", type=int, help="Positivity index, 1 <= m < n")
        parser.add_argument("--fn", help="Function spec, e.g. 'fund()' or 'radpow(s=0.5)'")
        parser.add_argument("--current", help="Current spec, e.g. 'cur(coef=1, ddc=fund()^(1))'")
        parser.add_argument(
            "--center",
            help="Center as comma-separated reals (re, im pairs); the origin by default",
        )
        parser.add_argument("--r1", type=float, help="Inner radius")
        parser.add_argument("--r2", type=float, help="Outer radius")
        parser.add_argument("--rmin", type=float, help="Smallest profile radius")
        parser.add_argument("--rmax", type=float, help="Largest profile radius")
        parser.add_argument("--points", type=int, help="Number of profile radii")
        parser.add_argument("--seed", type=int, help="Random seed")
        parser.add_argument("--samples", type=int, help="Monte-Carlo samples per shell")
        parser.add_argument("--out", type=Path, help="Output file (stdout when omitted)")
        parser.add_argument(
            "--format",
            choices=[fmt.value for fmt in ReportFormat],
            help=f"Output format (default {self.default_format.value})",
        )
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        """Hook for command-specific arguments."""

    def config_options(self, options) -> dict:
        """Extra RunConfig fields taken from the options."""
        return {}

    def handle(self, *args, **options):
        """Execute the command."""
        try:
            self.run_config = RunConfig.build(
                n=options["n"],
                m=options["m"],
                seed=options["seed"],
                samples=options["samples"],
                out=options["out"],
                format=options["format"] or self.default_format,
                **self.config_options(options),
            )
            self.run(options)
        except LabException as e:
            raise CommandError(e.message, returncode=2) from e

    def run(self, options):
        raise NotImplementedError

    @property
    def fmt(self) -> ReportFormat:
        return self.run_config.format

    def lelong_config(self, options) -> LelongConfig:
        overrides = {
            field: options[key]
            for key, field in (("rmin", "r_min"), ("rmax", "r_max"), ("points", "points"))
            if options[key] is not None
        }
        return LelongConfig().with_overrides(**overrides)

    def center(self, options):
        n = self.run_config.n
        if options["center"] is None:
            return as_point([0j] * n)
        try:
            reals = [float(part) for part in options["center"].split(",")]
        except ValueError as e:
            raise ValidationError(f"--center must be comma-separated reals: {e}") from e
        return as_point(point_from_reals(reals), n)

    def function(self, options) -> ModelFunction:
        if not options["fn"]:
            raise ValidationError("--fn is required")
        parsed = parse_function_spec(options["fn"], self.run_config.setting)
        if isinstance(parsed, SimpleCurrent):
            raise ValidationError("--fn expects a function spec, got a current")
        return parsed

    def current(self, options) -> SimpleCurrent:
        """The --current spec, or the closed current dd^c of --fn."""
        if options["current"]:
            parsed = parse_function_spec(options["current"], self.run_config.setting)
            if not isinstance(parsed, SimpleCurrent):
                raise ValidationError("--current expects a current spec")
            return parsed
        if options["fn"]:
            return closed_current(self.run_config.setting, self.function(options))
        raise ValidationError("Give --current or --fn")

    def summary(self, message: str) -> None:
        """Print a summary line without mixing it into data written to stdout."""
        if self.run_config.out is None:
            self.stderr.write(message)
        else:
            self.stdout.write(self.style.SUCCESS(message))
