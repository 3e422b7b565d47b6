from .emit import controls_payload, emit_results, emit_sweep, plane_axes
from .points import PointDocument, infer_format, load_points
from .svg import render_plane_svg, write_svg

__all__ = [
    "PointDocument",
    "controls_payload",
    "emit_results",
    "emit_sweep",
    "infer_format",
    "load_points",
    "plane_axes",
    "render_plane_svg",
    "write_svg",
]
