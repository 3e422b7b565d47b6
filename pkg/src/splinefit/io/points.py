"""
Reading ordered point chains from CSV or JSON files
"""

import csv
import json
import math
from pathlib import Path
from typing import List, Optional, Union

from pydantic import BaseModel, Field, ValidationError

from ..errors import PointFileError
from ..geometry.core import PointChain
from ..models.config import PointFormat


class PointDocument(BaseModel):
    """JSON layout: {"points": [[x, y, ...], ...]} or the bare list"""

    points: List[List[float]] = Field(..., description="Rows of coordinates in chain order")


def infer_format(path: Union[str, Path]) -> PointFormat:
    return PointFormat.JSON if Path(path).suffix.lower() == ".json" else PointFormat.CSV


def _check_rows(rows: List[List[float]], line_numbers: List[Optional[int]]) -> None:
    if len(rows) < 2:
        raise PointFileError(f"Need at least 2 points, found {len(rows)}")

    width = len(rows[0])
    for row, line in zip(rows, line_numbers):
        if len(row) != width:
            raise PointFileError(f"expected {width} columns, found {len(row)}", line)
        if not all(math.isfinite(value) for value in row):
            raise PointFileError("coordinates must be finite", line)
    if width < 2:
        raise PointFileError(f"Points need at least 2 coordinates, found {width}")


def _parse_csv(text: str, skip_columns: int) -> PointChain:
    rows: List[List[float]] = []
    line_numbers: List[Optional[int]] = []
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = next(csv.reader([stripped]))
        try:
            values = [float(field) for field in fields[skip_columns:]]
        except ValueError as e:
            raise PointFileError(f"not a number ({e})", number) from e
        rows.append(values)
        line_numbers.append(number)

    _check_rows(rows, line_numbers)
    return PointChain(rows)


def _parse_json(text: str, skip_columns: int) -> PointChain:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise PointFileError(e.msg, e.lineno) from e

    if isinstance(data, list):
        data = {"points": data}
    try:
        document = PointDocument.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise PointFileError(f"{location}: {first['msg']}") from e

    rows = [row[skip_columns:] for row in document.points]
    _check_rows(rows, [None] * len(rows))
    return PointChain(rows)


def load_points(
    path: Union[str, Path],
    format: Optional[Union[PointFormat, str]] = None,
    skip_columns: int = 0,
) -> PointChain:
    """Load a chain; '#' lines are comments, the first ``skip_columns`` are ignored"""
    path = Path(path)
    point_format = PointFormat(format) if format else infer_format(path)
    try:
        raw = path.read_bytes()
    except OSError as e:
        raise PointFileError(f"Cannot read {path}: {e.strerror or e}") from e
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        line = raw.count(b"\n", 0, e.start) + 1
        raise PointFileError(f"{path} is not UTF-8 text", line) from e

    if not text.strip():
        raise PointFileError(f"{path} is empty")
    if point_format is PointFormat.JSON:
        return _parse_json(text, skip_columns)
    return _parse_csv(text, skip_columns)
