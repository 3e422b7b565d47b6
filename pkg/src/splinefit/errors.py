"""Exception hierarchy for curve fitting.

Input problems derive from ``ValueError`` and map to CLI exit status 1;
numeric breakdowns derive from ``ArithmeticError`` and map to exit status 2.
"""

from typing import Optional


class SplineFitError(Exception):
    """Base class for every error raised by splinefit"""


class FitInputError(SplineFitError, ValueError):
    """The caller supplied data or arguments the fit cannot accept"""


class ChainError(FitInputError):
    """A point chain is too short, ragged, or contains non-finite values"""


class AxisError(FitInputError):
    """An axis index is out of range for the chain dimension"""


class ParameterRangeError(FitInputError):
    """A curve parameter lies outside its domain"""


class JunctionMismatchError(FitInputError):
    """Adjacent Bezier pieces (or merged planes) do not share their junctions"""


class SelectionError(FitInputError):
    """A dominant-point selection is inconsistent with its chain"""


class PointFileError(FitInputError):
    """A point file could not be parsed"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NumericFailure(SplineFitError, ArithmeticError):
    """A computation became undefined or produced non-finite values"""


class DegenerateGeometryError(NumericFailure):
    """Coincident points make a direction or projection undefined"""
