"""
Point chains and their projection onto corresponding coordinate planes.

A space curve in R^n is split into n-1 planar chains that all share one
independent axis; each plane pairs that axis with one dependent axis.
"""

from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np
from numpy.typing import ArrayLike

from ..errors import AxisError, ChainError
from ..utils import as_point_array


AXIS_NAMES = "XYZ"


def axis_name(axis: int, dim: int) -> str:
    """Letter names for up to three axes, indexed names beyond that"""
    if dim <= len(AXIS_NAMES):
        return AXIS_NAMES[axis]
    return f"X{axis}"


@dataclass(frozen=True, eq=False)
class PointChain:
    """Ordered data points of one dimension; order is never changed"""

    points: np.ndarray

    def __init__(self, points: ArrayLike):
        array = as_point_array(points, min_points=2)
        if array.shape[1] < 2:
            raise ChainError(f"Points need at least 2 coordinates, got {array.shape[1]}")
        object.__setattr__(self, "points", array)

    @property
    def dim(self) -> int:
        return int(self.points.shape[1])

    def __len__(self) -> int:
        return int(self.points.shape[0])

    def __getitem__(self, index: int) -> np.ndarray:
        return self.points[index]

    def subchain(self, indices: Sequence[int]) -> "PointChain":
        return PointChain(self.points[list(indices)])


@dataclass(frozen=True, eq=False)
class PlanarChain:
    """One coordinate plane of a chain: (independent, dependent) per point"""

    independent: np.ndarray
    dependent: np.ndarray
    axis_labels: Tuple[int, int] = field(default=(0, 1))

    def __post_init__(self):
        independent = np.array(self.independent, dtype=float)
        dependent = np.array(self.dependent, dtype=float)
        if independent.shape != dependent.shape or independent.ndim != 1:
            raise ChainError("Planar coordinate lists must be 1-D and of equal length")
        if independent.shape[0] < 2:
            raise ChainError("A planar chain needs at least 2 points")
        independent.setflags(write=False)
        dependent.setflags(write=False)
        object.__setattr__(self, "independent", independent)
        object.__setattr__(self, "dependent", dependent)
        object.__setattr__(self, "axis_labels", tuple(int(a) for a in self.axis_labels))

    def __len__(self) -> int:
        return int(self.independent.shape[0])

    @property
    def independent_axis(self) -> int:
        return self.axis_labels[0]

    @property
    def dependent_axis(self) -> int:
        return self.axis_labels[1]

    def as_points(self) -> np.ndarray:
        """Planar points with the independent coordinate first"""
        return np.column_stack([self.independent, self.dependent])

    def as_chain(self) -> PointChain:
        return PointChain(self.as_points())


def check_axis(axis: int, dim: int) -> int:
    if not 0 <= axis < dim:
        raise AxisError(f"Axis index {axis} is out of range for dimension {dim}")
    return int(axis)


def project_to_planes(chain: PointChain, independent_axis: int) -> List[PlanarChain]:
    """Split an R^n chain into its n-1 corresponding coordinate planes.

    Planes are ordered by ascending dependent axis.
    """
    if chain.dim < 3:
        raise ChainError(f"Plane projection needs dimension >= 3, got {chain.dim}")
    check_axis(independent_axis, chain.dim)

    independent = chain.points[:, independent_axis]
    return [
        PlanarChain(independent, chain.points[:, axis], (independent_axis, axis))
        for axis in range(chain.dim)
        if axis != independent_axis
    ]


def assemble_from_planes(planes: Sequence[PlanarChain]) -> PointChain:
    """Inverse of project_to_planes"""
    if not planes:
        raise ChainError("No planes to assemble")

    independent_axis = planes[0].independent_axis
    dim = len(planes) + 1
    axes = sorted([independent_axis] + [plane.dependent_axis for plane in planes])
    if axes != list(range(dim)) or any(
        plane.independent_axis != independent_axis for plane in planes
    ):
        raise AxisError("Planes do not cover every axis exactly once around one shared axis")

    points = np.empty((len(planes[0]), dim))
    points[:, independent_axis] = planes[0].independent
    for plane in planes:
        if not np.array_equal(plane.independent, planes[0].independent):
            raise ChainError("Planes disagree on the independent coordinate")
        points[:, plane.dependent_axis] = plane.dependent
    return PointChain(points)
