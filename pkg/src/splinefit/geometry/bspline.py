"""
Cubic B-spline curves on the knot schedule

    t_i = 0            for i < k
    t_i = i - k + 1    for k <= i <= n
    t_i = n - k + 2    for i > n

with basis values from the Cox-de Boor recursion (0/0 taken as 0).
"""

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np
from numpy.typing import ArrayLike

from ..errors import ChainError, FitInputError
from ..utils import as_point_array, check_domain_parameter
from .bezier import BezierSegment, PiecewiseBezier

CUBIC_ORDER = 4


@dataclass(frozen=True, eq=False)
class KnotVector:
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.ndim != 1 or values.size < 2:
            raise FitInputError("A knot vector is a 1-D list of at least two values")
        if np.any(np.diff(values) < 0):
            raise FitInputError("Knot values must be non-decreasing")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return int(self.values.size)

    def __getitem__(self, index):
        return self.values[index]

    def tolist(self) -> list:
        return self.values.tolist()


def build_knot_vector(num_controls: int, order: int = CUBIC_ORDER) -> KnotVector:
    if order < 1:
        raise FitInputError(f"Order must be positive, got {order}")
    if num_controls < order:
        raise FitInputError(
            f"Need at least {order} controls for order {order}, got {num_controls}"
        )

    n = num_controls - 1
    k = order
    knots = [0 if i < k else (i - k + 1 if i <= n else n - k + 2) for i in range(n + k + 1)]
    return KnotVector(np.array(knots, dtype=float))


def build_bezier_knot_vector(num_segments: int) -> KnotVector:
    """Clamped cubic knots with every interior value repeated three times.

    The B-spline on the deduplicated controls of ``num_segments`` Bezier pieces
    then reproduces those pieces exactly (C1 at the junctions only).
    """
    if num_segments < 1:
        raise FitInputError("Need at least one segment")
    knots = [0.0] * CUBIC_ORDER
    for junction in range(1, num_segments):
        knots.extend([float(junction)] * (CUBIC_ORDER - 1))
    knots.extend([float(num_segments)] * CUBIC_ORDER)
    return KnotVector(np.array(knots))


def _knot_values(knots: Union[KnotVector, ArrayLike]) -> np.ndarray:
    if isinstance(knots, KnotVector):
        return knots.values
    return KnotVector(knots).values


def _ratio(numerator: float, denominator: float) -> float:
    if denominator == 0.0:
        return 0.0
    return numerator / denominator


def _cox_de_boor(i: int, k: int, u: float, t: np.ndarray, end: float) -> float:
    if k == 1:
        if t[i] <= u < t[i + 1]:
            return 1.0
        # close the last non-empty span so the final control is reproduced
        if u == end and t[i] < t[i + 1] == end:
            return 1.0
        return 0.0

    left = _ratio(u - t[i], t[i + k - 1] - t[i])
    right = _ratio(t[i + k] - u, t[i + k] - t[i + 1])
    value = 0.0
    if left:
        value += left * _cox_de_boor(i, k - 1, u, t, end)
    if right:
        value += right * _cox_de_boor(i + 1, k - 1, u, t, end)
    return value


def basis(i: int, k: int, u: float, knots: Union[KnotVector, ArrayLike]) -> float:
    """N_{i,k}(u) by direct recursion"""
    t = _knot_values(knots)
    n = t.size - k - 1
    if k < 1 or n < 0:
        raise FitInputError(f"Knot vector of length {t.size} does not support order {k}")
    if not 0 <= i <= n:
        raise FitInputError(f"Basis index {i} is outside [0, {n}]")

    low, high = t[k - 1], t[n + 1]
    u = check_domain_parameter(u, low, high)
    return _cox_de_boor(i, k, u, t, high)


def find_span(u: float, order: int, t: np.ndarray, side: str = "right") -> int:
    """Index s with t[s] <= u < t[s+1] (right) or t[s] < u <= t[s+1] (left)"""
    n = t.size - order - 1
    if side == "right":
        span = int(np.searchsorted(t, u, side="right")) - 1
    elif side == "left":
        span = int(np.searchsorted(t, u, side="left")) - 1
    else:
        raise FitInputError(f"side must be 'left' or 'right', got {side!r}")
    return min(max(span, order - 1), n)


def basis_functions(span: int, u: float, order: int, t: np.ndarray) -> np.ndarray:
    """The ``order`` basis values N_{span-order+1..span} that can be non-zero at u"""
    degree = order - 1
    values = np.zeros(order)
    values[0] = 1.0
    left = np.zeros(order)
    right = np.zeros(order)
    for j in range(1, degree + 1):
        left[j] = u - t[span + 1 - j]
        right[j] = t[span + j] - u
        saved = 0.0
        for r in range(j):
            temp = values[r] / (right[r + 1] + left[j - r])
            values[r] = saved + right[r + 1] * temp
            saved = left[j - r] * temp
        values[j] = saved
    return values


@dataclass(frozen=True, eq=False)
class BSplineCurve:
    controls: np.ndarray
    knots: KnotVector
    order: int = CUBIC_ORDER

    def __post_init__(self):
        controls = as_point_array(self.controls)
        knots = self.knots if isinstance(self.knots, KnotVector) else KnotVector(self.knots)
        order = int(self.order)
        if order < 1:
            raise FitInputError(f"Order must be positive, got {order}")
        if controls.shape[0] < order:
            raise ChainError(
                f"Order {order} needs at least {order} controls, got {controls.shape[0]}"
            )
        if len(knots) != controls.shape[0] + order:
            raise FitInputError(
                f"{controls.shape[0]} controls of order {order} need "
                f"{controls.shape[0] + order} knots, got {len(knots)}"
            )
        object.__setattr__(self, "controls", controls)
        object.__setattr__(self, "knots", knots)
        object.__setattr__(self, "order", order)

    @property
    def dim(self) -> int:
        return int(self.controls.shape[1])

    @property
    def domain(self) -> tuple:
        t = self.knots.values
        return float(t[self.order - 1]), float(t[-self.order])

    def evaluate(self, u: float, derivative: int = 0, side: str = "right") -> np.ndarray:
        """Point (or derivative) at u; ``side`` picks the span at a knot"""
        if derivative < 0:
            raise FitInputError(f"Derivative order must be non-negative, got {derivative}")
        curve = self
        for _ in range(derivative):
            if curve.order == 1:
                return np.zeros(self.dim)
            curve = curve.derivative_curve()

        low, high = curve.domain
        u = check_domain_parameter(u, low, high)
        t = curve.knots.values
        span = find_span(u, curve.order, t, side)
        weights = basis_functions(span, u, curve.order, t)
        return weights @ curve.controls[span - curve.order + 1 : span + 1]

    def derivative_curve(self) -> "BSplineCurve":
        """The hodograph as a B-spline of one order lower"""
        if self.order < 2:
            raise FitInputError("An order-1 curve has no derivative curve")
        k = self.order
        t = self.knots.values
        n = self.controls.shape[0] - 1
        spans = t[k : n + k] - t[1 : n + 1]
        scale = np.divide(
            k - 1, spans, out=np.zeros_like(spans), where=spans != 0.0
        )
        controls = scale[:, None] * np.diff(self.controls, axis=0)
        return BSplineCurve(controls, KnotVector(t[1:-1]), k - 1)

    def sample(self, count: int) -> tuple:
        """(parameters, points) at ``count`` uniform parameters over the domain"""
        low, high = self.domain
        params = np.linspace(low, high, count)
        return params, np.vstack([self.evaluate(u) for u in params])

    def interior_knots(self) -> np.ndarray:
        low, high = self.domain
        values = np.unique(self.knots.values)
        return values[(values > low) & (values < high)]


def eval_bspline(curve: BSplineCurve, u: float) -> np.ndarray:
    return curve.evaluate(u)


def bspline_from_bezier_controls(
    pw: Union[PiecewiseBezier, Sequence[BezierSegment]], bezier_exact: bool = False
) -> BSplineCurve:
    """Cubic B-spline on the junction-deduplicated Bezier controls.

    With the default knots the result is a C2 curve near the pieces that
    interpolates only the first and last control; ``bezier_exact`` uses triple
    interior knots and reproduces the pieces.
    """
    if not isinstance(pw, PiecewiseBezier):
        pw = PiecewiseBezier(tuple(pw))

    controls = pw.control_points()
    if bezier_exact:
        knots = build_bezier_knot_vector(len(pw))
    else:
        knots = build_knot_vector(controls.shape[0], CUBIC_ORDER)
    return BSplineCurve(controls, knots, CUBIC_ORDER)
