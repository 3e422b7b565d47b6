from .config import DEFAULT_TENSION, DominantTier, FitConfig, KnotMode, PointFormat
from .report import FitReport, SweepRow

__all__ = [
    "DEFAULT_TENSION",
    "DominantTier",
    "FitConfig",
    "FitReport",
    "KnotMode",
    "PointFormat",
    "SweepRow",
]
