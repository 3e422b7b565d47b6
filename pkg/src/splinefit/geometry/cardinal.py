"""
Cardinal (Catmull-Rom class) spline interpolation.

Each segment between data points p[k-1] and p[k] is the cubic
(u^3, u^2, u, 1) . M(tau) . (p[k-2], p[k-1], p[k], p[k+1]) with the chain's
first and last points repeated so that the end segments have full windows.
"""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from numpy.typing import ArrayLike

from ..errors import ChainError
from ..models.config import DEFAULT_TENSION
from ..utils import check_unit_parameter, require_finite
from .core import PointChain


def cardinal_matrix(tau: float = DEFAULT_TENSION) -> np.ndarray:
    """Geometry matrix M mapping the 4-point window to cubic coefficients a, b, c, d"""
    t = float(tau)
    return np.array(
        [
            [-t, 2.0 - t, t - 2.0, t],
            [2.0 * t, t - 3.0, 3.0 - 2.0 * t, -t],
            [-t, 0.0, t, 0.0],
            [0.0, 1.0, 0.0, 0.0],
        ]
    )


@dataclass(frozen=True, eq=False)
class CardinalSegment:
    """Window (p[k-2], p[k-1], p[k], p[k+1]) and the tension of its segment"""

    controls: np.ndarray
    tau: float = DEFAULT_TENSION

    def __post_init__(self):
        controls = np.array(self.controls, dtype=float)
        if controls.ndim != 2 or controls.shape[0] != 4:
            raise ChainError(f"A cardinal window needs 4 points, got shape {controls.shape}")
        if not np.isfinite(self.tau):
            raise ChainError(f"Tension must be finite, got {self.tau}")
        controls.setflags(write=False)
        object.__setattr__(self, "controls", controls)
        object.__setattr__(self, "tau", float(self.tau))

    @property
    def coefficients(self) -> np.ndarray:
        """Rows a, b, c, d of the segment polynomial"""
        return cardinal_matrix(self.tau) @ self.controls

    def evaluate(self, u: float) -> np.ndarray:
        return eval_cardinal(self, u)

    def derivative(self, u: float) -> np.ndarray:
        return cardinal_derivative(self, u)


def extend_chain(chain: PointChain) -> PointChain:
    """Repeat the first and last points so every data pair has a 4-point window"""
    points = chain.points
    return PointChain(np.vstack([points[:1], points, points[-1:]]))


def cardinal_segments(chain: PointChain, tau: float = DEFAULT_TENSION) -> List[CardinalSegment]:
    extended = extend_chain(chain).points
    return [
        CardinalSegment(extended[k : k + 4], tau) for k in range(len(extended) - 3)
    ]


def segment_tangents(window: CardinalSegment) -> Tuple[np.ndarray, np.ndarray]:
    """Tangents at p[k-1] and p[k]: tau (p[k] - p[k-2]) and tau (p[k+1] - p[k-1])"""
    p = window.controls
    return window.tau * (p[2] - p[0]), window.tau * (p[3] - p[1])


def eval_cardinal(segment: CardinalSegment, u: float) -> np.ndarray:
    u = check_unit_parameter(u)
    return np.array([u**3, u**2, u, 1.0]) @ segment.coefficients


def cardinal_derivative(segment: CardinalSegment, u: float) -> np.ndarray:
    u = check_unit_parameter(u)
    return np.array([3.0 * u**2, 2.0 * u, 1.0, 0.0]) @ segment.coefficients


def sample_cardinal(
    chain: PointChain, tau: float = DEFAULT_TENSION, samples_per_segment: int = 32
) -> np.ndarray:
    """Uniform per-segment samples; shared junction samples appear once"""
    us = np.linspace(0.0, 1.0, samples_per_segment)
    basis = np.column_stack([us**3, us**2, us, np.ones_like(us)])

    rows: List[ArrayLike] = []
    for index, segment in enumerate(cardinal_segments(chain, tau)):
        with np.errstate(over="ignore", invalid="ignore"):
            values = basis @ segment.coefficients
        rows.append(values if index == 0 else values[1:])
    return require_finite(np.vstack(rows), "Cardinal samples")
