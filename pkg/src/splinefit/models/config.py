from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


DEFAULT_TENSION = 0.5


class KnotMode(str, Enum):
    SIMPLE = "simple"
    BEZIER_EXACT = "bezier_exact"


class DominantTier(str, Enum):
    PRIMARY = "primary"
    SUPPORT = "support"
    SECONDARY = "secondary"
    ENDPOINT = "endpoint"


class PointFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class FitConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    tau: float = Field(
        default=DEFAULT_TENSION,
        allow_inf_nan=False,
        description="Cardinal tension multiplying neighbour-difference tangents",
    )
    independent_axis: int = Field(
        default=0, ge=0, description="Axis shared by every coordinate plane"
    )
    dominant_fraction: float = Field(
        default=1.0, gt=0.0, le=1.0, description="Fraction of points kept as dominant"
    )
    samples_per_segment: int = Field(
        default=32, ge=2, description="Uniform samples per curve segment for output"
    )
    bezier_exact_knots: bool = Field(
        default=False,
        description="Use triple interior knots so the B-spline equals the Bezier pieces",
    )
    primary_count: Optional[int] = Field(
        default=None, ge=0, description="Override for the primary dominant count m1"
    )
    support_count: Optional[int] = Field(
        default=None, ge=0, description="Override for the support dominant count m2"
    )
    max_iterations: int = Field(
        default=500, ge=0, description="Cap on accepted local-search moves"
    )

    @property
    def knot_mode(self) -> KnotMode:
        return KnotMode.BEZIER_EXACT if self.bezier_exact_knots else KnotMode.SIMPLE
