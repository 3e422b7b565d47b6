"""
Small numeric helpers shared by the geometry modules
"""

from typing import Sequence, Union

import numpy as np
from numpy.typing import ArrayLike

from ..errors import ChainError, NumericFailure, ParameterRangeError

# Slack accepted at the edge of a parameter domain before it counts as outside.
DOMAIN_SLACK = 1e-12


def as_point_array(points: ArrayLike, min_points: int = 1) -> np.ndarray:
    """Return a read-only float64 (N, d) copy of ``points``"""
    try:
        array = np.array(points, dtype=float)
    except (TypeError, ValueError) as e:
        raise ChainError(f"Points are not numeric: {e}") from e

    if array.ndim != 2:
        raise ChainError(f"Expected an (N, d) array of points, got shape {array.shape}")
    if array.shape[1] < 1:
        raise ChainError("Points must have at least one coordinate")
    if array.shape[0] < min_points:
        raise ChainError(f"Need at least {min_points} points, got {array.shape[0]}")
    if not np.all(np.isfinite(array)):
        raise ChainError("Points contain NaN or infinite coordinates")

    array.setflags(write=False)
    return array


def require_finite(values: np.ndarray, what: str) -> np.ndarray:
    """Raise NumericFailure when a computed array overflowed or became undefined"""
    if not np.all(np.isfinite(values)):
        raise NumericFailure(f"{what} are not finite; the input coordinates are too large")
    return values


def check_unit_parameter(u: float) -> float:
    """Validate a per-segment parameter and snap rounding noise onto [0, 1]"""
    u = float(u)
    if not -DOMAIN_SLACK <= u <= 1.0 + DOMAIN_SLACK:
        raise ParameterRangeError(f"Segment parameter {u} is outside [0, 1]")
    return min(max(u, 0.0), 1.0)


def check_domain_parameter(u: float, low: float, high: float) -> float:
    u = float(u)
    if not low - DOMAIN_SLACK <= u <= high + DOMAIN_SLACK:
        raise ParameterRangeError(f"Parameter {u} is outside [{low}, {high}]")
    return min(max(u, low), high)


def format_number(value: float) -> str:
    """Fixed six-digit formatting; negative zero prints as zero"""
    text = f"{float(value):.6f}"
    if text == "-0.000000":
        return "0.000000"
    return text


def round_list(values: Union[np.ndarray, Sequence[float]]) -> list:
    """Nested lists of floats rounded to six fractional digits, for JSON output"""
    to_fixed = np.vectorize(lambda v: float(format_number(v)), otypes=[float])
    return to_fixed(np.asarray(values, dtype=float)).tolist()
