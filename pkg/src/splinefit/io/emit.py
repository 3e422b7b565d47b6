"""
Writing fit results to an output directory.

All numbers are written with six fractional digits and files are produced
in a fixed order, so repeated runs give byte-identical output.
"""

import csv
import json
import logging
from pathlib import Path
from typing import List, Sequence, Union

import numpy as np

from ..geometry.core import axis_name
from ..models.report import SweepRow
from ..pipeline import FitResult
from ..utils import format_number, round_list
from .svg import render_plane_svg, write_svg

logger = logging.getLogger(__name__)

CONTROLS_FILE = "controls.json"
SAMPLES_FILE = "samples.csv"
BSPLINE_FILE = "bspline.csv"
REPORT_FILE = "report.json"
SWEEP_JSON_FILE = "sweep.json"
SWEEP_FILE = "sweep.csv"


def _write_json(path: Path, payload: dict) -> Path:
    path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    return path


def _write_table(path: Path, header: Sequence[str], rows: np.ndarray) -> Path:
    with path.open("w", encoding="utf-8", newline="") as handle:
        handle.write("# " + ",".join(header) + "\n")
        writer = csv.writer(handle, lineterminator="\n")
        for row in rows:
            writer.writerow([format_number(value) for value in row])
    return path


def _coordinate_names(dim: int) -> List[str]:
    return [axis_name(axis, dim).lower() for axis in range(dim)]


def plane_axes(result: FitResult) -> List[tuple]:
    """(horizontal, vertical) axis pairs drawn for a result"""
    independent = result.config.independent_axis
    return [(independent, axis) for axis in range(result.dim) if axis != independent]


def controls_payload(result: FitResult) -> dict:
    curve = result.curve
    return {
        "dimension": result.dim,
        "order": curve.order,
        "knot_mode": result.config.knot_mode.value,
        "knots": round_list(curve.knots.values),
        "control_points": round_list(curve.controls),
        "bezier_segments": round_list(result.piecewise.segment_controls()),
    }


def emit_results(result: FitResult, out_dir: Union[str, Path]) -> List[Path]:
    """Write controls, samples, report and one SVG per plane; returns the paths"""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    names = _coordinate_names(result.dim)
    samples_per_segment = result.config.samples_per_segment

    written = [_write_json(out / CONTROLS_FILE, controls_payload(result))]

    params, points = result.piecewise.sample(samples_per_segment)
    written.append(
        _write_table(out / SAMPLES_FILE, ["s"] + names, np.column_stack([params, points]))
    )

    count = samples_per_segment * len(result.piecewise)
    u, curve_points = result.curve.sample(count)
    written.append(
        _write_table(out / BSPLINE_FILE, ["u"] + names, np.column_stack([u, curve_points]))
    )

    report = result.report().model_dump(mode="json")
    written.append(_write_json(out / REPORT_FILE, report))

    data = result.input_chain.points
    dominant = result.selection.indices if result.selection else None
    for horizontal, vertical in plane_axes(result):
        columns = [horizontal, vertical]
        labels = (axis_name(horizontal, result.dim), axis_name(vertical, result.dim))
        svg = render_plane_svg(
            data[:, columns],
            result.curve.controls[:, columns],
            curve_points[:, columns],
            labels,
            dominant,
        )
        written.append(write_svg(svg, out / f"plane_{labels[0]}{labels[1]}.svg"))

    logger.info("Wrote %d files to %s", len(written), out)
    return written


def emit_sweep(rows: Sequence[SweepRow], out_dir: Union[str, Path]) -> List[Path]:
    """One report row per fraction as JSON and CSV"""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    payload = {"rows": [row.model_dump(mode="json") for row in rows]}
    written = [_write_json(out / SWEEP_JSON_FILE, payload)]

    with (out / SWEEP_FILE).open("w", encoding="utf-8", newline="") as handle:
        handle.write("# fraction,m,error,iterations\n")
        writer = csv.writer(handle, lineterminator="\n")
        for row in rows:
            writer.writerow(
                [format_number(row.fraction), row.m, format_number(row.error), row.iterations]
            )
    written.append(out / SWEEP_FILE)

    logger.info("Wrote sweep of %d fractions to %s", len(rows), out)
    return written
