from typing import List, Optional

from pydantic import BaseModel, Field, field_serializer

from ..utils.numeric import format_number
from .config import DominantTier, KnotMode


def _fixed(value: float) -> float:
    return float(format_number(value))


class SweepRow(BaseModel):
    fraction: float = Field(..., description="Requested dominant fraction")
    m: int = Field(..., description="Number of dominant points used")
    error: float = Field(..., description="Least-squares error e_m of the skipped points")
    iterations: int = Field(..., description="Accepted local-search moves")

    @field_serializer("error")
    def _serialize_error(self, value: float) -> float:
        return _fixed(value)


class FitReport(BaseModel):
    dimension: int = Field(..., description="Dimension of the fitted chain")
    points: int = Field(..., description="Number of input data points")
    segments: int = Field(..., description="Bezier pieces in the fitted curve")
    tension: float = Field(..., description="Cardinal tension used")
    independent_axis: int = Field(
        ..., description="Axis shared by the coordinate planes"
    )
    knot_mode: KnotMode = Field(..., description="Knot schedule of the B-spline")
    fraction: float = Field(..., description="Requested dominant fraction")
    m: int = Field(..., description="Number of dominant points used")
    error: float = Field(default=0.0, description="Least-squares error e_m")
    gap_errors: List[float] = Field(
        default_factory=list, description="Error per dominant gap"
    )
    dominant_indices: List[int] = Field(
        default_factory=list, description="Indices of dominant points"
    )
    tiers: List[DominantTier] = Field(
        default_factory=list, description="Tier per dominant index"
    )
    iterations: int = Field(default=0, description="Accepted local-search moves")
    history: List[float] = Field(
        default_factory=list, description="e_m after each accepted move"
    )
    m1: Optional[int] = Field(
        None, description="Primary dominant points in the final selection"
    )
    m2: Optional[int] = Field(
        None, description="Support dominant points in the final selection"
    )

    @field_serializer("tension", "fraction", "error")
    def _serialize_number(self, value: float) -> float:
        return _fixed(value)

    @field_serializer("gap_errors", "history")
    def _serialize_numbers(self, values: List[float]) -> List[float]:
        return [_fixed(value) for value in values]
