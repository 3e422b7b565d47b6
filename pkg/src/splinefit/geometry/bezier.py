"""
Cubic Bezier segments and C1 piecewise Bezier curves built from cardinal splines.
"""

from dataclasses import dataclass
from typing import List

import numpy as np
from numpy.typing import ArrayLike

from ..errors import ChainError, JunctionMismatchError
from ..models.config import DEFAULT_TENSION
from ..utils import check_domain_parameter, check_unit_parameter, require_finite
from .core import PointChain

# Geometry matrix of a cubic Bezier in power form, rows for u^3, u^2, u, 1.
BEZIER_MATRIX = np.array(
    [
        [-1.0, 3.0, -3.0, 1.0],
        [3.0, -6.0, 3.0, 0.0],
        [-3.0, 3.0, 0.0, 0.0],
        [1.0, 0.0, 0.0, 0.0],
    ]
)


def bernstein(u: float) -> np.ndarray:
    v = 1.0 - u
    return np.array([v**3, 3.0 * v**2 * u, 3.0 * v * u**2, u**3])


@dataclass(frozen=True, eq=False)
class BezierSegment:
    """Four control points P0..P3 of one cubic piece"""

    controls: np.ndarray

    def __post_init__(self):
        controls = np.array(self.controls, dtype=float)
        if controls.ndim != 2 or controls.shape[0] != 4:
            raise ChainError(f"A cubic Bezier needs 4 controls, got shape {controls.shape}")
        controls.setflags(write=False)
        object.__setattr__(self, "controls", controls)

    @property
    def dim(self) -> int:
        return int(self.controls.shape[1])

    @property
    def start(self) -> np.ndarray:
        return self.controls[0]

    @property
    def end(self) -> np.ndarray:
        return self.controls[3]

    @property
    def coefficients(self) -> np.ndarray:
        """Power-form rows a, b, c, d so that b(u) = (u^3, u^2, u, 1) . coefficients"""
        return BEZIER_MATRIX @ self.controls

    def evaluate(self, u: float) -> np.ndarray:
        return eval_bezier(self, u)

    def derivative(self, u: float) -> np.ndarray:
        return bezier_derivative(self, u)

    def sample(self, count: int) -> np.ndarray:
        us = np.linspace(0.0, 1.0, count)
        v = 1.0 - us
        weights = np.column_stack([v**3, 3.0 * v**2 * us, 3.0 * v * us**2, us**3])
        return weights @ self.controls


def eval_bezier(seg: BezierSegment, u: float) -> np.ndarray:
    u = check_unit_parameter(u)
    return bernstein(u) @ seg.controls


def bezier_derivative(seg: BezierSegment, u: float) -> np.ndarray:
    u = check_unit_parameter(u)
    legs = np.diff(seg.controls, axis=0)
    v = 1.0 - u
    return 3.0 * np.array([v**2, 2.0 * v * u, u**2]) @ legs


def bezier_second_derivative(seg: BezierSegment, u: float) -> np.ndarray:
    u = check_unit_parameter(u)
    second = np.diff(seg.controls, n=2, axis=0)
    return 6.0 * np.array([1.0 - u, u]) @ second


@dataclass(frozen=True, eq=False)
class PiecewiseBezier:
    """Ordered Bezier pieces; each piece starts exactly where the previous ends"""

    segments: tuple

    def __post_init__(self):
        segments = tuple(self.segments)
        if not segments:
            raise ChainError("A piecewise Bezier needs at least one segment")
        dims = {seg.dim for seg in segments}
        if len(dims) != 1:
            raise ChainError(f"Segments mix dimensions {sorted(dims)}")
        for index, (left, right) in enumerate(zip(segments, segments[1:])):
            if not np.array_equal(left.end, right.start):
                raise JunctionMismatchError(
                    f"Segment {index} ends at {left.end} but segment {index + 1} "
                    f"starts at {right.start}"
                )
        object.__setattr__(self, "segments", segments)

    @classmethod
    def from_controls(cls, controls: ArrayLike) -> "PiecewiseBezier":
        """Build from an (S, 4, d) array of per-segment controls"""
        array = np.asarray(controls, dtype=float)
        return cls(tuple(BezierSegment(block) for block in array))

    def __len__(self) -> int:
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)

    def __getitem__(self, index: int) -> BezierSegment:
        return self.segments[index]

    @property
    def dim(self) -> int:
        return self.segments[0].dim

    def segment_controls(self) -> np.ndarray:
        """(S, 4, d) array of all controls"""
        return np.stack([seg.controls for seg in self.segments])

    def control_points(self) -> np.ndarray:
        """P0..Pn with shared junction controls listed once; piece s starts at 3s"""
        blocks = [self.segments[0].controls]
        blocks.extend(seg.controls[1:] for seg in self.segments[1:])
        return np.vstack(blocks)

    def knots(self) -> np.ndarray:
        """Interpolated data points: every segment start plus the final end"""
        return np.vstack([seg.start for seg in self.segments] + [self.segments[-1].end])

    def evaluate(self, s: float) -> np.ndarray:
        """Evaluate on the global parameter s in [0, len(self)]"""
        s = check_domain_parameter(s, 0.0, float(len(self)))
        index = min(int(np.floor(s)), len(self) - 1)
        return eval_bezier(self.segments[index], s - index)

    def derivative(self, s: float) -> np.ndarray:
        s = check_domain_parameter(s, 0.0, float(len(self)))
        index = min(int(np.floor(s)), len(self) - 1)
        return bezier_derivative(self.segments[index], s - index)

    def sample(self, samples_per_segment: int) -> tuple:
        """(parameters, points) with junction samples listed once"""
        us = np.linspace(0.0, 1.0, samples_per_segment)
        params: List[np.ndarray] = []
        points: List[np.ndarray] = []
        for index, seg in enumerate(self.segments):
            start = 0 if index == 0 else 1
            params.append(index + us[start:])
            points.append(seg.sample(samples_per_segment)[start:])
        return np.concatenate(params), np.vstack(points)

    def junction_tangent_gaps(self) -> np.ndarray:
        """Norm of b'(1) of piece s minus b'(0) of piece s+1, per junction"""
        gaps = [
            np.linalg.norm(bezier_derivative(left, 1.0) - bezier_derivative(right, 0.0))
            for left, right in zip(self.segments, self.segments[1:])
        ]
        return np.array(gaps, dtype=float)


def cardinal_bezier_controls(points: np.ndarray, tau: float = DEFAULT_TENSION) -> np.ndarray:
    """(S, 4, d) Bezier controls reproducing the cardinal spline through ``points``"""
    e = np.vstack([points[:1], points, points[-1:]])
    start = e[1:-2]
    end = e[2:-1]
    with np.errstate(over="ignore", invalid="ignore"):
        inner_start = start + (tau / 3.0) * (e[2:-1] - e[:-3])
        inner_end = end - (tau / 3.0) * (e[3:] - e[1:-2])
    controls = np.stack([start, inner_start, inner_end, end], axis=1)
    return require_finite(controls, "Bezier controls")


def cardinal_to_bezier(chain: PointChain, tau: float = DEFAULT_TENSION) -> PiecewiseBezier:
    """One Bezier piece per data pair, matching the cardinal boundary conditions.

    P1 = P0 + tau/3 (p[k] - p[k-2]) and P2 = P3 - tau/3 (p[k+1] - p[k-1]), so
    b'(0) and b'(1) equal the cardinal tangents and both cubics coincide.
    """
    return PiecewiseBezier.from_controls(cardinal_bezier_controls(chain.points, tau))

