import math

import numpy as np
import pytest

from splinefit.geometry import PointChain


@pytest.fixture
def zigzag() -> PointChain:
    return PointChain([(i, (-1) ** i) for i in range(12)])


@pytest.fixture
def square_wave() -> PointChain:
    return PointChain(
        [(0, 0), (1, 0), (1, 1), (2, 1), (2, 0), (3, 0), (3, 1), (4, 1), (4, 0), (5, 0)]
    )


@pytest.fixture
def helix() -> PointChain:
    t = np.linspace(0.0, 2.0 * math.pi, 10)
    return PointChain(np.column_stack([np.cos(t), t, np.sin(t)]))


@pytest.fixture
def chain_4d() -> PointChain:
    t = np.linspace(0.0, 3.0, 8)
    return PointChain(np.column_stack([t, np.cos(t), np.sin(t), t**2 / 10.0]))


@pytest.fixture
def write_points(tmp_path):
    def write(rows, name="points.csv"):
        path = tmp_path / name
        path.write_text(
            "\n".join(",".join(str(v) for v in row) for row in rows) + "\n",
            encoding="utf-8",
        )
        return path

    return write
