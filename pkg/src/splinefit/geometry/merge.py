"""
Merge planar piecewise Bezier controls into control points in R^n.

Every plane pairs the shared independent axis with one dependent axis. Per
segment the inner controls are slid along their tangent lines so that all
planes agree on the independent coordinate: the start leg moves to the mean
start interval p, the end leg to the mean end interval q. Directions of the
per-plane tangents are kept, only their magnitudes change.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from ..errors import AxisError, ChainError, JunctionMismatchError
from ..utils import require_finite
from .bezier import PiecewiseBezier

logger = logging.getLogger(__name__)

INTERFACE_TOL = 1e-9
LEG_EPS = 1e-12


@dataclass(frozen=True, eq=False)
class MergeLeg:
    """Per-plane independent intervals of one segment and their means p, q"""

    start_intervals: np.ndarray
    end_intervals: np.ndarray
    p: float
    q: float


def _check_axes(axis_labels: Sequence[Tuple[int, int]]) -> Tuple[int, List[int]]:
    independent_axes = {int(labels[0]) for labels in axis_labels}
    if len(independent_axes) != 1:
        raise AxisError(f"Planes use different independent axes {sorted(independent_axes)}")
    independent = independent_axes.pop()
    dependent = [int(labels[1]) for labels in axis_labels]
    dim = len(axis_labels) + 1
    if sorted([independent] + dependent) != list(range(dim)):
        raise AxisError(
            f"Axis pairs {list(axis_labels)} do not cover axes 0..{dim - 1} exactly once"
        )
    return independent, dependent


def _stack_planes(plane_curves: Sequence[PiecewiseBezier]) -> np.ndarray:
    if len(plane_curves) < 2:
        raise ChainError("Merging needs at least two coordinate planes")
    counts = {len(curve) for curve in plane_curves}
    if len(counts) != 1:
        raise ChainError(f"Plane curves have different segment counts {sorted(counts)}")
    if any(curve.dim != 2 for curve in plane_curves):
        raise ChainError("Plane curves must be planar (independent, dependent)")

    controls = np.stack([curve.segment_controls() for curve in plane_curves])
    x = controls[..., 0]
    for position in (0, 3):
        spread = np.ptp(x[:, :, position], axis=0)
        if np.any(spread > INTERFACE_TOL):
            segment = int(np.argmax(spread))
            raise JunctionMismatchError(
                f"Segment {segment}: planes disagree on the independent coordinate "
                f"of control {position} by {spread[segment]:.3g}"
            )
    return controls


def _legs(controls: np.ndarray) -> List[MergeLeg]:
    x = controls[..., 0]
    start = x[:, :, 1] - x[:, :, 0]
    end = x[:, :, 2] - x[:, :, 3]
    return [
        MergeLeg(
            start[:, s].copy(),
            end[:, s].copy(),
            float(start[:, s].mean()),
            float(end[:, s].mean()),
        )
        for s in range(x.shape[1])
    ]


def compute_merge_legs(plane_curves: Sequence[PiecewiseBezier]) -> List[MergeLeg]:
    return _legs(_stack_planes(plane_curves))


def _slide(
    anchor: np.ndarray, inner: np.ndarray, interval: np.ndarray, target: np.ndarray
) -> np.ndarray:
    """Dependent coordinate on the line anchor->inner at independent offset ``target``"""
    degenerate = np.abs(interval) < LEG_EPS
    with np.errstate(over="ignore", invalid="ignore"):
        scale = np.divide(target, interval, out=np.ones_like(interval), where=~degenerate)
        slid = anchor + (inner - anchor) * scale
    # a vertical leg has no unique point at the target offset; keep its dependent value
    return np.where(degenerate, inner, slid)


def merge_plane_controls(
    plane_curves: Sequence[PiecewiseBezier], axis_labels: Sequence[Tuple[int, int]]
) -> PiecewiseBezier:
    """Combine the planes' controls into one piecewise Bezier in R^(planes+1).

    Output coordinates follow the original axis order given by ``axis_labels``
    (independent axis, dependent axis) per plane.
    """
    if len(axis_labels) != len(plane_curves):
        raise AxisError("Need one axis pair per plane curve")
    independent, dependent = _check_axes(axis_labels)
    controls = _stack_planes(plane_curves)

    x = controls[..., 0]
    y = controls[..., 1]
    legs = _legs(controls)
    start = np.stack([leg.start_intervals for leg in legs], axis=1)
    end = np.stack([leg.end_intervals for leg in legs], axis=1)
    p = np.array([leg.p for leg in legs])
    q = np.array([leg.q for leg in legs])

    degenerate = int(
        np.count_nonzero(np.abs(start) < LEG_EPS) + np.count_nonzero(np.abs(end) < LEG_EPS)
    )
    if degenerate:
        logger.warning(
            "%d control leg(s) have no independent extent; their dependent "
            "coordinates are kept and only the independent coordinate is moved",
            degenerate,
        )

    second = _slide(y[:, :, 0], y[:, :, 1], start, np.broadcast_to(p, start.shape))
    third = _slide(y[:, :, 3], y[:, :, 2], end, np.broadcast_to(q, end.shape))

    segments = x.shape[1]
    merged = np.empty((segments, 4, len(plane_curves) + 1))
    merged[:, 0, independent] = x[0, :, 0]
    merged[:, 1, independent] = x[0, :, 0] + p
    merged[:, 2, independent] = x[0, :, 3] + q
    merged[:, 3, independent] = x[0, :, 3]
    for plane, axis in enumerate(dependent):
        merged[:, 0, axis] = y[plane, :, 0]
        merged[:, 1, axis] = second[plane]
        merged[:, 2, axis] = third[plane]
        merged[:, 3, axis] = y[plane, :, 3]

    return PiecewiseBezier.from_controls(require_finite(merged, "Merged controls"))
