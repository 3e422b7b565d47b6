from .bezier import (
    BEZIER_MATRIX,
    BezierSegment,
    PiecewiseBezier,
    bezier_derivative,
    bezier_second_derivative,
    bernstein,
    cardinal_bezier_controls,
    cardinal_to_bezier,
    eval_bezier,
)
from .bspline import (
    CUBIC_ORDER,
    BSplineCurve,
    KnotVector,
    basis,
    basis_functions,
    bspline_from_bezier_controls,
    build_bezier_knot_vector,
    build_knot_vector,
    eval_bspline,
    find_span,
)
from .cardinal import (
    CardinalSegment,
    cardinal_derivative,
    cardinal_matrix,
    cardinal_segments,
    eval_cardinal,
    extend_chain,
    sample_cardinal,
    segment_tangents,
)
from .core import (
    PlanarChain,
    PointChain,
    assemble_from_planes,
    axis_name,
    check_axis,
    project_to_planes,
)
from .merge import MergeLeg, compute_merge_legs, merge_plane_controls

__all__ = [
    "BEZIER_MATRIX",
    "BSplineCurve",
    "BezierSegment",
    "CUBIC_ORDER",
    "CardinalSegment",
    "KnotVector",
    "MergeLeg",
    "PiecewiseBezier",
    "PlanarChain",
    "PointChain",
    "assemble_from_planes",
    "axis_name",
    "basis",
    "basis_functions",
    "bernstein",
    "bezier_derivative",
    "bezier_second_derivative",
    "bspline_from_bezier_controls",
    "build_bezier_knot_vector",
    "build_knot_vector",
    "cardinal_bezier_controls",
    "cardinal_derivative",
    "cardinal_matrix",
    "cardinal_segments",
    "cardinal_to_bezier",
    "check_axis",
    "compute_merge_legs",
    "eval_bezier",
    "eval_bspline",
    "eval_cardinal",
    "extend_chain",
    "find_span",
    "merge_plane_controls",
    "project_to_planes",
    "sample_cardinal",
    "segment_tangents",
]
