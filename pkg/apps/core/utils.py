"""
Core utility functions for the laboratory.

Number formatting and small grid helpers shared by services and commands.
"""

import math

import numpy as np


def format_number(value: float | str | None) -> str:
    """
    Format a number at 17 significant digits for CSV output.

    Sentinels and missing values pass through as text.

    Args:
        value: Float, sentinel string, or None.

    Returns:
        Text representation.

    Example:
        >>> format_number(0.1)
        '0.10000000000000001'
        >>> format_number("unbounded")
        'unbounded'
        >>> format_number(None)
        ''
    """
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return format(float(value), ".17g")


def geometric_grid(start: float, stop: float, points: int) -> np.ndarray:
    """
    Build a strictly increasing geometric grid.

    Args:
        start: First value (> 0).
        stop: Last value (> start).
        points: Number of grid points (>= 2).

    Returns:
        Array of grid values.

    Example:
        >>> geometric_grid(1e-3, 1e-1, 3)[[0, -1]].tolist()
        [0.001, 0.1]
    """
    if start <= 0 or stop <= start or points < 2:
        raise ValueError("geometric grid needs 0 < start < stop and points >= 2")
    grid = np.geomspace(start, stop, points)
    grid[0], grid[-1] = start, stop
    return grid


def relative_difference(value: float, reference: float, floor: float = 1e-300) -> float:
    """
    Relative difference between a value and a reference.

    Args:
        value: Measured value.
        reference: Reference value.
        floor: Lower bound on the denominator.

    Returns:
        |value - reference| / max(|reference|, floor).

    Example:
        >>> relative_difference(1.01, 1.0)
        0.010000000000000009
    """
    return abs(value - reference) / max(abs(reference), floor)
