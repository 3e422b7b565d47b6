"""
SVG plots of one coordinate plane: data points, control polygon and curve.

The view box is taken from the extents of everything drawn plus a 5% margin.
World y grows upward, so it is negated on output.
"""

import xml.etree.ElementTree as ET
from pathlib import Path
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from ..utils import format_number

SVG_NS = "http://www.w3.org/2000/svg"
CANVAS_WIDTH = 640
MARGIN = 0.05


def _view_box(*blocks: np.ndarray) -> Tuple[float, float, float, float]:
    points = np.vstack(blocks)
    low = points.min(axis=0)
    high = points.max(axis=0)
    extent = high - low
    size = float(extent.max()) or 1.0
    # flat extents get a square box around their centre
    extent = np.where(extent > 0.0, extent, size)
    centre = (low + high) / 2.0
    low = centre - extent / 2.0 - MARGIN * extent
    extent = extent * (1.0 + 2.0 * MARGIN)
    return float(low[0]), float(low[1]), float(extent[0]), float(extent[1])


def _path_data(points: np.ndarray) -> str:
    moves = [
        f"{format_number(x)} {format_number(-y)}" for x, y in np.asarray(points)
    ]
    return "M" + " L".join(moves)


def render_plane_svg(
    data: np.ndarray,
    controls: np.ndarray,
    curve: np.ndarray,
    labels: Tuple[str, str] = ("X", "Y"),
    dominant: Optional[Sequence[int]] = None,
) -> ET.Element:
    """SVG root for one plane; every array is (N, 2) as (horizontal, vertical)"""
    data = np.asarray(data, dtype=float)
    controls = np.asarray(controls, dtype=float)
    curve = np.asarray(curve, dtype=float)
    x, y, width, height = _view_box(data, controls, curve)
    size = max(width, height)
    stroke = format_number(size * 0.003)

    root = ET.Element(
        "svg",
        xmlns=SVG_NS,
        version="1.1",
        width=str(CANVAS_WIDTH),
        height=str(max(1, round(CANVAS_WIDTH * height / width))),
        viewBox=" ".join(
            format_number(v) for v in (x, -(y + height), width, height)
        ),
    )

    polygon = ET.SubElement(root, "g", id="control-polygon")
    ET.SubElement(
        polygon,
        "path",
        d=_path_data(controls),
        fill="none",
        stroke="#888888",
        **{"stroke-width": stroke, "stroke-dasharray": f"{stroke} {stroke}"},
    )

    fitted = ET.SubElement(root, "g", id="curve")
    ET.SubElement(
        fitted,
        "path",
        d=_path_data(curve),
        fill="none",
        stroke="#1f77b4",
        **{"stroke-width": stroke},
    )

    marked = set(range(len(data))) if dominant is None else set(dominant)
    points = ET.SubElement(root, "g", id="data")
    radius = format_number(size * 0.008)
    for index, (px, py) in enumerate(data):
        ET.SubElement(
            points,
            "circle",
            cx=format_number(px),
            cy=format_number(-py),
            r=radius,
            fill="#d62728" if index in marked else "none",
            stroke="#d62728",
            **{"stroke-width": stroke},
        )

    font = format_number(size * 0.04)
    horizontal = ET.SubElement(
        root,
        "text",
        x=format_number(x + width / 2.0),
        y=format_number(-y - size * 0.005),
        **{"font-size": font, "text-anchor": "middle"},
    )
    horizontal.text = labels[0]
    vertical = ET.SubElement(
        root,
        "text",
        x=format_number(x + size * 0.01),
        y=format_number(-(y + height / 2.0)),
        **{"font-size": font},
    )
    vertical.text = labels[1]
    return root


def write_svg(svg: ET.Element, path: Union[str, Path]) -> Path:
    path = Path(path)
    ET.ElementTree(svg).write(path, encoding="utf-8", xml_declaration=True)
    return path
