"""
Report writers.

JSON keeps floats at full round-trip precision; CSV writes numbers at 17
significant digits through ``format_number``.
"""

import csv
import json
import logging
import sys
from collections.abc import Iterable, Iterator, Sequence
from contextlib import contextmanager
from pathlib import Path
from typing import TextIO

from pydantic import BaseModel

from apps.core.exceptions import ValidationError
from apps.core.utils import format_number

from .exceptions import ReportWriteError
from .schemas import Report, ReportFormat

logger = logging.getLogger(__name__)

REPORT_COLUMNS = ("id", "paperRef", "status", "value", "expected", "tolerance", "diagnostics")


@contextmanager
def open_output(path: Path | None, default: TextIO | None = None) -> Iterator[TextIO]:
    """
    Yield a text stream for ``path``, or ``default`` (stdout) when no path is given.

    Raises:
        ReportWriteError: If the file cannot be opened.
    """
    if path is None:
        yield default or sys.stdout
        return
    try:
        handle = open(path, "w", encoding="utf-8", newline="")
    except OSError as e:
        raise ReportWriteError(f"Cannot write {path}: {e.strerror}") from e
    with handle:
        yield handle
    logger.info(f"Wrote {path}")


def _cell(value) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int | float | str) or value is None:
        return format_number(value)
    return json.dumps(value, default=str)


def write_rows(columns: Sequence[str], rows: Iterable[Sequence], stream: TextIO) -> None:
    """Write a CSV table, numbers at 17 significant digits."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(value) for value in row])


def _flatten(data: dict, prefix: str = "") -> Iterator[tuple[str, object]]:
    for key, value in data.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            yield from _flatten(value, f"{name}.")
        else:
            yield name, value


def write_report(report: Report, fmt: ReportFormat, stream: TextIO) -> None:
    """
    Write a suite report.

    JSON carries ``{runId, setting, seed, kappa, checks}``; CSV has one row per
    check.

    Raises:
        ValidationError: If the report has no checks.
    """
    if not report.checks:
        raise ValidationError("Refusing to write a report without checks")
    if fmt is ReportFormat.JSON:
        stream.write(report.model_dump_json(by_alias=True, indent=2) + "\n")
        return
    write_rows(
        REPORT_COLUMNS,
        (
            (
                check.id,
                check.reference,
                check.status.value,
                check.value,
                check.expected,
                check.tolerance,
                check.diagnostics,
            )
            for check in report.checks
        ),
        stream,
    )


def emit_report(
    report: Report, fmt: ReportFormat, path: Path | None, default: TextIO | None = None
) -> None:
    """Write a report to ``path`` or to the default stream."""
    with open_output(path, default) as stream:
        write_report(report, fmt, stream)


def write_models(models: dict[str, BaseModel], fmt: ReportFormat, stream: TextIO) -> None:
    """Write several named result models as one JSON object or one CSV table."""
    data = {name: model.model_dump(mode="json") for name, model in models.items()}
    if fmt is ReportFormat.JSON:
        stream.write(json.dumps(data, indent=2) + "\n")
        return
    write_rows(("field", "value"), _flatten(data), stream)
