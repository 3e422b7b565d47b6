from .dominant import (
    DominantSelection,
    SubsetFitter,
    TurnAngleEntry,
    chain_turn_angles,
    default_split,
    evaluate_selection,
    gap_errors,
    initial_guess,
    map_to_curve,
    optimize,
    planar_fitter,
    point_errors,
    square_error,
    turn_angle,
    turn_angles,
)

__all__ = [
    "DominantSelection",
    "SubsetFitter",
    "TurnAngleEntry",
    "chain_turn_angles",
    "default_split",
    "evaluate_selection",
    "gap_errors",
    "initial_guess",
    "map_to_curve",
    "optimize",
    "planar_fitter",
    "point_errors",
    "square_error",
    "turn_angle",
    "turn_angles",
]
