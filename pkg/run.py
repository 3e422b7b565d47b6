#!/usr/bin/env python3
"""
Cardinal B-spline Fitter - Main Entry Point

Runs the splinefit command line from a source checkout:

    python run.py fit --input points.csv --out out/
"""

import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent / "src"))

from splinefit.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
