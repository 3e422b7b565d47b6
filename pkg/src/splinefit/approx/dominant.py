"""
Dominant-point selection for approximating fits.

A dominant subset keeps both chain ends. Every skipped point is scored by
projecting it onto the chord between the dominant points around it, using the
projection ratio as the parameter on the fitted piece, and taking the squared
distance to that curve point. The initial subset ranks vertices by turn angle;
a select/deselect local search then lowers the summed error.
"""

import logging
import math
from dataclasses import dataclass, replace
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..errors import DegenerateGeometryError, SelectionError
from ..geometry.bezier import BezierSegment, PiecewiseBezier, cardinal_to_bezier, eval_bezier
from ..geometry.core import PointChain, project_to_planes
from ..models.config import DEFAULT_TENSION, DominantTier

logger = logging.getLogger(__name__)

SubsetFitter = Callable[[PointChain], PiecewiseBezier]


@dataclass(frozen=True)
class TurnAngleEntry:
    index: int
    angle: float


@dataclass(frozen=True)
class DominantSelection:
    """Sorted dominant indices with a tier per index and the current error e_m"""

    indices: Tuple[int, ...]
    tiers: Tuple[DominantTier, ...]
    m1: int = 0
    m2: int = 0
    error: Optional[float] = None
    iterations: int = 0
    history: Tuple[float, ...] = ()

    def __post_init__(self):
        indices = tuple(int(i) for i in self.indices)
        tiers = tuple(DominantTier(t) for t in self.tiers)
        if len(indices) < 2:
            raise SelectionError("A selection needs at least the two chain ends")
        if any(b <= a for a, b in zip(indices, indices[1:])):
            raise SelectionError(f"Dominant indices must be strictly increasing: {indices}")
        if len(tiers) != len(indices):
            raise SelectionError("Need exactly one tier per dominant index")
        if self.m1 + self.m2 > len(indices):
            raise SelectionError(f"m1 + m2 = {self.m1 + self.m2} exceeds m = {len(indices)}")
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "tiers", tiers)

    @property
    def m(self) -> int:
        return len(self.indices)

    def tier_of(self, index: int) -> DominantTier:
        return self.tiers[self.indices.index(index)]

    def check_chain(self, chain_length: int) -> None:
        if self.indices[0] != 0 or self.indices[-1] != chain_length - 1:
            raise SelectionError(
                f"Selection must contain indices 0 and {chain_length - 1}, "
                f"got {self.indices[0]}..{self.indices[-1]}"
            )


def _indices_of(
    selection: Union[DominantSelection, Sequence[int]], chain_length: int
) -> List[int]:
    if isinstance(selection, DominantSelection):
        selection.check_chain(chain_length)
        return list(selection.indices)

    indices = [int(i) for i in selection]
    if len(indices) < 2 or indices[0] != 0 or indices[-1] != chain_length - 1:
        raise SelectionError(f"Selection must contain indices 0 and {chain_length - 1}")
    if any(b <= a for a, b in zip(indices, indices[1:])):
        raise SelectionError(f"Dominant indices must be strictly increasing: {indices}")
    return indices


# ----------------------------------------------------------------- turn angles


def turn_angle(prev: np.ndarray, cur: np.ndarray, nxt: np.ndarray) -> float:
    """Exterior angle at ``cur``: pi minus the angle between cur->prev and cur->next"""
    fs = np.asarray(prev, dtype=float) - np.asarray(cur, dtype=float)
    ts = np.asarray(nxt, dtype=float) - np.asarray(cur, dtype=float)
    norm = float(np.linalg.norm(fs) * np.linalg.norm(ts))
    if norm == 0.0:
        raise DegenerateGeometryError(f"Zero-length leg at vertex {np.asarray(cur).tolist()}")
    cosine = float(np.clip(np.dot(fs, ts) / norm, -1.0, 1.0))
    return math.pi - math.acos(cosine)


def turn_angles(points: np.ndarray) -> List[TurnAngleEntry]:
    """Turn angle of every interior vertex; coincident neighbours rank as 0"""
    entries = []
    for index in range(1, len(points) - 1):
        try:
            angle = turn_angle(points[index - 1], points[index], points[index + 1])
        except DegenerateGeometryError:
            logger.debug("Vertex %d has a zero-length leg; ranking it with angle 0", index)
            angle = 0.0
        entries.append(TurnAngleEntry(index, angle))
    return entries


def chain_turn_angles(chain: PointChain, independent_axis: int = 0) -> List[TurnAngleEntry]:
    """Planar turn angles; in R^n the angles of all coordinate planes are summed"""
    if chain.dim == 2:
        return turn_angles(chain.points)

    totals: Dict[int, float] = {}
    for plane in project_to_planes(chain, independent_axis):
        for entry in turn_angles(plane.as_points()):
            totals[entry.index] = totals.get(entry.index, 0.0) + entry.angle
    return [TurnAngleEntry(index, totals[index]) for index in sorted(totals)]


# ---------------------------------------------------------------------- error


def map_to_curve(
    pt: np.ndarray, d_from: np.ndarray, d_to: np.ndarray, piece: BezierSegment
) -> Tuple[float, np.ndarray]:
    """Parameter from the chord projection ratio and the curve point it maps to"""
    chord = np.asarray(d_to, dtype=float) - np.asarray(d_from, dtype=float)
    length_sq = float(chord @ chord)
    if length_sq == 0.0:
        raise DegenerateGeometryError("Consecutive dominant points coincide")
    offset = np.asarray(pt, dtype=float) - np.asarray(d_from, dtype=float)
    t = min(max(float(offset @ chord) / length_sq, 0.0), 1.0)
    return t, eval_bezier(piece, t)


def _gap_squared_errors(
    points: np.ndarray, start: int, stop: int, piece: BezierSegment
) -> np.ndarray:
    skipped = points[start + 1 : stop]
    if skipped.shape[0] == 0:
        return np.zeros(0)

    chord = points[stop] - points[start]
    length_sq = float(chord @ chord)
    if length_sq == 0.0:
        raise DegenerateGeometryError(f"Dominant points {start} and {stop} coincide")
    t = np.clip((skipped - points[start]) @ chord / length_sq, 0.0, 1.0)
    v = 1.0 - t
    weights = np.column_stack([v**3, 3.0 * v**2 * t, 3.0 * v * t**2, t**3])
    mapped = weights @ piece.controls
    return np.sum((mapped - skipped) ** 2, axis=1)


def _check_fitted(indices: Sequence[int], fitted: PiecewiseBezier) -> None:
    if len(fitted) != len(indices) - 1:
        raise SelectionError(
            f"Fitted curve has {len(fitted)} pieces but the selection has {len(indices) - 1} gaps"
        )


def point_errors(
    chain: PointChain, selection: Union[DominantSelection, Sequence[int]], fitted: PiecewiseBezier
) -> np.ndarray:
    """Squared error per chain point; dominant points score 0"""
    indices = _indices_of(selection, len(chain))
    _check_fitted(indices, fitted)
    errors = np.zeros(len(chain))
    for piece, (start, stop) in zip(fitted, zip(indices, indices[1:])):
        errors[start + 1 : stop] = _gap_squared_errors(chain.points, start, stop, piece)
    return errors


def gap_errors(
    chain: PointChain, selection: Union[DominantSelection, Sequence[int]], fitted: PiecewiseBezier
) -> np.ndarray:
    """Summed squared error of the skipped points in each gap between dominant points"""
    indices = _indices_of(selection, len(chain))
    _check_fitted(indices, fitted)
    return np.array(
        [
            float(np.sum(_gap_squared_errors(chain.points, start, stop, piece)))
            for piece, (start, stop) in zip(fitted, zip(indices, indices[1:]))
        ]
    )


def square_error(
    chain: PointChain, selection: Union[DominantSelection, Sequence[int]], fitted: PiecewiseBezier
) -> float:
    return float(np.sum(gap_errors(chain, selection, fitted)))


def planar_fitter(tau: float = DEFAULT_TENSION) -> SubsetFitter:
    """Fit a dominant subchain with the cardinal piecewise Bezier"""

    def fit(subchain: PointChain) -> PiecewiseBezier:
        return cardinal_to_bezier(subchain, tau)

    return fit


# ------------------------------------------------------------------ selection


def default_split(m: int) -> Tuple[int, int]:
    """m1 = ceil(m/4) primaries and room for two supports per primary"""
    m1 = math.ceil(m / 4)
    return m1, min(2 * m1, m - m1)


def initial_guess(
    chain: PointChain,
    m: int,
    m1: Optional[int] = None,
    m2: Optional[int] = None,
    angles: Optional[Sequence[TurnAngleEntry]] = None,
    independent_axis: int = 0,
) -> DominantSelection:
    """Turn-angle ranked guess: primaries, their chain neighbours, then secondaries.

    Ties in turn angle go to the lower index. Supports are placed by first
    taking each primary's next neighbour, then each previous neighbour.
    """
    count = len(chain)
    if m < 2:
        raise SelectionError(f"Need at least 2 dominant points, got m = {m}")
    if m > count:
        raise SelectionError(f"m = {m} exceeds the chain length {count}")

    default_m1, default_m2 = default_split(m)
    m1 = default_m1 if m1 is None else m1
    m2 = default_m2 if m2 is None else m2
    if m1 < 0 or m2 < 0 or m1 + m2 > m:
        raise SelectionError(f"Invalid split m1 = {m1}, m2 = {m2} for m = {m}")

    if angles is None:
        angles = chain_turn_angles(chain, independent_axis)
    ranked = [entry.index for entry in sorted(angles, key=lambda e: (-e.angle, e.index))]

    tiers: Dict[int, DominantTier] = {0: DominantTier.ENDPOINT, count - 1: DominantTier.ENDPOINT}

    primaries = ranked[: min(m1, m - len(tiers))]
    for index in primaries:
        tiers[index] = DominantTier.PRIMARY

    supports = 0
    for offset in (1, -1):
        for index in primaries:
            if supports >= m2 or len(tiers) >= m:
                break
            neighbour = index + offset
            if neighbour in tiers:
                continue
            tiers[neighbour] = DominantTier.SUPPORT
            supports += 1

    for index in ranked[m1:]:
        if len(tiers) >= m:
            break
        if index not in tiers:
            tiers[index] = DominantTier.SECONDARY

    indices = sorted(tiers)
    return DominantSelection(
        indices=tuple(indices),
        tiers=tuple(tiers[i] for i in indices),
        m1=len(primaries),
        m2=supports,
    )


def evaluate_selection(
    chain: PointChain, selection: DominantSelection, fitter: Optional[SubsetFitter] = None
) -> DominantSelection:
    """Return ``selection`` with its error e_m filled in"""
    fitter = fitter or planar_fitter()
    fitted = fitter(chain.subchain(selection.indices))
    error = square_error(chain, selection, fitted)
    return replace(selection, error=error, history=selection.history or (error,))


class _LocalSearch:
    """Select/deselect moves over one chain; errors are cached per index set"""

    def __init__(self, chain: PointChain, fitter: SubsetFitter):
        self.chain = chain
        self.fitter = fitter
        self._cache: Dict[Tuple[int, ...], float] = {}

    def error(self, indices: Sequence[int]) -> float:
        key = tuple(indices)
        if key not in self._cache:
            try:
                fitted = self.fitter(self.chain.subchain(key))
                self._cache[key] = square_error(self.chain, key, fitted)
            except DegenerateGeometryError:
                self._cache[key] = math.inf
        return self._cache[key]

    def improving_move(
        self, indices: List[int], current: float
    ) -> Optional[Tuple[List[int], float]]:
        """First improving swap in priority order, or None at a local minimum.

        Insertions come from the gap with the largest error (its worst point
        first); removals from the gap with the smallest error, trying the
        cheaper of its two members.
        """
        if current == 0.0:
            return None

        fitted = self.fitter(self.chain.subchain(indices))
        per_point = point_errors(self.chain, indices, fitted)
        per_gap = gap_errors(self.chain, indices, fitted)
        gaps = list(range(len(indices) - 1))

        insert_order = [
            point
            for gap in sorted(gaps, key=lambda g: (-per_gap[g], g))
            for point in sorted(
                range(indices[gap] + 1, indices[gap + 1]), key=lambda i: (-per_point[i], i)
            )
        ]
        removal_gaps = sorted(gaps, key=lambda g: (per_gap[g], g))
        last = len(self.chain) - 1

        for inserted in insert_order:
            grown = sorted(indices + [inserted])
            for gap in removal_gaps:
                members = [i for i in (indices[gap], indices[gap + 1]) if 0 < i < last]
                if not members:
                    continue
                options = [([i for i in grown if i != member], member) for member in members]
                scored = sorted(
                    (self.error(candidate), member, candidate)
                    for candidate, member in options
                )
                best_error, _, best = scored[0]
                if best_error < current:
                    return best, best_error
        return None


def optimize(
    chain: PointChain,
    m: int,
    guess: DominantSelection,
    fitter: Optional[SubsetFitter] = None,
    max_iterations: int = 500,
) -> DominantSelection:
    """Lower e_m by swapping one dominant point at a time until no swap helps"""
    guess.check_chain(len(chain))
    if guess.m != m:
        raise SelectionError(f"Guess has {guess.m} dominant points, expected {m}")

    search = _LocalSearch(chain, fitter or planar_fitter())
    indices = list(guess.indices)
    error = search.error(indices)
    if math.isinf(error):
        raise DegenerateGeometryError(
            "The initial selection has coincident consecutive dominant points"
        )

    history = [error]
    iterations = 0
    while iterations < max_iterations:
        move = search.improving_move(indices, error)
        if move is None:
            break
        indices, error = move
        iterations += 1
        history.append(error)
        logger.debug("Local search step %d: e_m = %.12g", iterations, error)

    previous = dict(zip(guess.indices, guess.tiers))
    tiers = tuple(previous.get(i, DominantTier.SECONDARY) for i in indices)
    return DominantSelection(
        indices=tuple(indices),
        tiers=tiers,
        m1=sum(t is DominantTier.PRIMARY for t in tiers),
        m2=sum(t is DominantTier.SUPPORT for t in tiers),
        error=error,
        iterations=iterations,
        history=tuple(history),
    )
