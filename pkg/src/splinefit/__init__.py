"""
splinefit - C2 cubic B-splines through ordered point chains.

Planar chains are fitted through a cardinal spline and its piecewise Bezier
form; chains in R^n are fitted plane by plane around one independent axis and
merged. A dominant-point search fits a subset of the points.
"""

from .errors import FitInputError, NumericFailure, SplineFitError
from .geometry import BSplineCurve, PiecewiseBezier, PointChain
from .models import FitConfig, FitReport, SweepRow
from .pipeline import (
    FitResult,
    approximate_with_fraction,
    fc2,
    fcn,
    fit,
    sweep_fractions,
)

__version__ = "0.1.0"

__all__ = [
    "BSplineCurve",
    "FitConfig",
    "FitInputError",
    "FitReport",
    "FitResult",
    "NumericFailure",
    "PiecewiseBezier",
    "PointChain",
    "SplineFitError",
    "SweepRow",
    "approximate_with_fraction",
    "fc2",
    "fcn",
    "fit",
    "sweep_fractions",
]
