"""
Fitting pipelines.

fc2 fits a planar chain: cardinal spline, its C1 piecewise Bezier, then the C2
B-spline on the Bezier controls. fcn fits a chain in R^n (n >= 3) by running
fc2 on every corresponding coordinate plane and merging the planar controls.
"""

import logging
import math
from dataclasses import dataclass, replace
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .approx.dominant import (
    DominantSelection,
    SubsetFitter,
    gap_errors,
    initial_guess,
    optimize,
    planar_fitter,
)
from .errors import ChainError
from .geometry.bezier import PiecewiseBezier, cardinal_to_bezier
from .geometry.bspline import BSplineCurve, bspline_from_bezier_controls
from .geometry.cardinal import sample_cardinal
from .geometry.core import PointChain, check_axis, project_to_planes
from .geometry.merge import merge_plane_controls
from .models.config import FitConfig
from .models.report import FitReport, SweepRow

logger = logging.getLogger(__name__)

DEFAULT_SWEEP = (1.0, 0.9, 0.8, 0.7)


@dataclass(frozen=True, eq=False)
class FitResult:
    """Artifacts of one fit; ``chain`` is the fitted (possibly dominant) chain"""

    chain: PointChain
    config: FitConfig
    cardinal_samples: np.ndarray
    piecewise: PiecewiseBezier
    curve: BSplineCurve
    source: Optional[PointChain] = None
    selection: Optional[DominantSelection] = None
    error: Optional[float] = None
    gap_errors: Optional[np.ndarray] = None
    plane_pieces: Tuple[PiecewiseBezier, ...] = ()

    @property
    def dim(self) -> int:
        return self.chain.dim

    @property
    def input_chain(self) -> PointChain:
        return self.source if self.source is not None else self.chain

    def report(self) -> FitReport:
        selection = self.selection
        return FitReport(
            dimension=self.dim,
            points=len(self.input_chain),
            segments=len(self.piecewise),
            tension=self.config.tau,
            independent_axis=self.config.independent_axis,
            knot_mode=self.config.knot_mode,
            fraction=self.config.dominant_fraction,
            m=len(self.chain),
            error=self.error or 0.0,
            gap_errors=[] if self.gap_errors is None else self.gap_errors.tolist(),
            dominant_indices=(
                list(selection.indices) if selection else list(range(len(self.chain)))
            ),
            tiers=list(selection.tiers) if selection else [],
            iterations=selection.iterations if selection else 0,
            history=list(selection.history) if selection else [],
            m1=selection.m1 if selection else None,
            m2=selection.m2 if selection else None,
        )


def fc2(chain: PointChain, config: Optional[FitConfig] = None) -> FitResult:
    config = config or FitConfig()
    if chain.dim != 2:
        raise ChainError(f"fc2 fits planar chains, got dimension {chain.dim}")
    check_axis(config.independent_axis, chain.dim)

    samples = sample_cardinal(chain, config.tau, config.samples_per_segment)
    piecewise = cardinal_to_bezier(chain, config.tau)
    curve = bspline_from_bezier_controls(piecewise, config.bezier_exact_knots)
    return FitResult(chain, config, samples, piecewise, curve)


def merged_bezier(
    chain: PointChain, tau: float, independent_axis: int
) -> Tuple[PiecewiseBezier, List[PiecewiseBezier]]:
    """Merged R^n piecewise Bezier and the planar pieces it came from"""
    planes = project_to_planes(chain, independent_axis)
    pieces = [cardinal_to_bezier(plane.as_chain(), tau) for plane in planes]
    merged = merge_plane_controls(pieces, [plane.axis_labels for plane in planes])
    return merged, pieces


def fcn(chain: PointChain, config: Optional[FitConfig] = None) -> FitResult:
    config = config or FitConfig()
    if chain.dim < 3:
        raise ChainError(f"fcn fits chains of dimension >= 3, got {chain.dim}")

    merged, pieces = merged_bezier(chain, config.tau, config.independent_axis)
    logger.debug("Merged %d coordinate planes into %d pieces", len(pieces), len(merged))
    curve = bspline_from_bezier_controls(merged, config.bezier_exact_knots)
    samples = sample_cardinal(chain, config.tau, config.samples_per_segment)
    return FitResult(chain, config, samples, merged, curve, plane_pieces=tuple(pieces))


def fit(chain: PointChain, config: Optional[FitConfig] = None) -> FitResult:
    return fc2(chain, config) if chain.dim == 2 else fcn(chain, config)


def subset_fitter(chain: PointChain, config: FitConfig) -> SubsetFitter:
    if chain.dim == 2:
        return planar_fitter(config.tau)

    def fit_merged(subchain: PointChain) -> PiecewiseBezier:
        return merged_bezier(subchain, config.tau, config.independent_axis)[0]

    return fit_merged


def dominant_count(fraction: float, chain_length: int) -> int:
    """Half-up rounding of fraction * N, clamped to [2, N]"""
    m = int(math.floor(fraction * chain_length + 0.5))
    return min(max(m, 2), chain_length)


def approximate_with_fraction(
    chain: PointChain, config: Optional[FitConfig] = None
) -> FitResult:
    """Fit the dominant subset chosen for ``config.dominant_fraction``"""
    config = config or FitConfig()
    check_axis(config.independent_axis, chain.dim)
    m = dominant_count(config.dominant_fraction, len(chain))
    fitter = subset_fitter(chain, config)

    guess = initial_guess(
        chain,
        m,
        config.primary_count,
        config.support_count,
        independent_axis=config.independent_axis,
    )
    selection = optimize(chain, m, guess, fitter, config.max_iterations)
    logger.info(
        "Dominant selection m=%d of %d after %d moves, e_m=%.6g",
        m,
        len(chain),
        selection.iterations,
        selection.error,
    )

    result = fit(chain.subchain(selection.indices), config)
    per_gap = gap_errors(chain, selection, result.piecewise)
    return replace(
        result,
        source=chain,
        selection=selection,
        error=float(np.sum(per_gap)),
        gap_errors=per_gap,
    )


def sweep_fractions(
    chain: PointChain,
    fractions: Sequence[float] = DEFAULT_SWEEP,
    config: Optional[FitConfig] = None,
) -> List[SweepRow]:
    """One approximation per fraction, in the given order"""
    config = config or FitConfig()
    rows = []
    for fraction in fractions:
        swept = FitConfig(**{**config.model_dump(), "dominant_fraction": fraction})
        result = approximate_with_fraction(chain, swept)
        rows.append(
            SweepRow(
                fraction=fraction,
                m=len(result.chain),
                error=result.error,
                iterations=result.selection.iterations,
            )
        )
    return rows
