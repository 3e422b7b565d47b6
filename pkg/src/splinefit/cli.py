"""
Command-line interface

    splinefit fit    --input points.csv --out out/
    splinefit approx --input points.csv --fraction 0.8 --out out/
    splinefit sweep  --input points.csv --fractions 1.0 0.9 0.8 --out out/

Exit status is 0 on success, 1 for invalid input or options and 2 when the
geometry makes a fit numerically undefined.
"""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from .errors import FitInputError, NumericFailure
from .io import emit_results, emit_sweep, load_points
from .models.config import DEFAULT_TENSION, FitConfig, PointFormat
from .pipeline import DEFAULT_SWEEP, approximate_with_fraction, fit, sweep_fractions

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_NUMERIC_FAILURE = 2

logger = logging.getLogger(__name__)


class _ArgumentParser(argparse.ArgumentParser):
    """Reports usage errors with the input-error status instead of argparse's 2"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="CSV or JSON file of points")
    common.add_argument(
        "--format",
        choices=[f.value for f in PointFormat],
        help="Input format (default: from the file suffix)",
    )
    common.add_argument(
        "--tension", type=float, default=DEFAULT_TENSION, help="Cardinal tension tau"
    )
    common.add_argument(
        "--independent-axis",
        type=int,
        default=0,
        help="Axis shared by the coordinate planes",
    )
    common.add_argument(
        "--samples", type=int, default=32, help="Samples per curve segment"
    )
    common.add_argument(
        "--bezier-exact",
        action="store_true",
        help="Triple interior knots so the B-spline reproduces the Bezier pieces",
    )
    common.add_argument("--out", default="out", help="Output directory")
    common.add_argument("--verbose", action="store_true", help="Debug logging")

    parser = _ArgumentParser(
        prog="splinefit",
        description="Fit C2 cubic B-splines through point chains in 2D, 3D and R^n",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  splinefit fit --input helix.csv --independent-axis 1 --out out/
  splinefit approx --input zigzag.json --fraction 0.8 --out out/
  splinefit sweep --input zigzag.csv --fractions 1.0 0.9 0.8 0.7 --out out/
        """,
    )
    commands = parser.add_subparsers(
        dest="command", required=True, parser_class=_ArgumentParser
    )
    commands.add_parser("fit", parents=[common], help="Fit every input point")
    approx = commands.add_parser(
        "approx", parents=[common], help="Fit a dominant subset of the points"
    )
    approx.add_argument(
        "--fraction",
        type=float,
        required=True,
        help="Fraction of points kept, in (0, 1]",
    )
    sweep = commands.add_parser(
        "sweep", parents=[common], help="Approximate at several fractions"
    )
    sweep.add_argument(
        "--fractions",
        type=float,
        nargs="+",
        default=list(DEFAULT_SWEEP),
        help="Fractions to try, in order",
    )
    return parser


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def _config(args: argparse.Namespace, fraction: float = 1.0) -> FitConfig:
    return FitConfig(
        tau=args.tension,
        independent_axis=args.independent_axis,
        dominant_fraction=fraction,
        samples_per_segment=args.samples,
        bezier_exact_knots=args.bezier_exact,
    )


def _validation_message(error: ValidationError) -> str:
    first = error.errors()[0]
    location = ".".join(str(part) for part in first["loc"]) or "config"
    return f"Invalid option {location}: {first['msg']}"


def run(args: argparse.Namespace) -> int:
    chain = load_points(args.input, args.format)
    print(f"📈 Loaded {len(chain)} points in {chain.dim}D from {args.input}")

    if args.command == "sweep":
        # validate every fraction before any fitting starts
        configs = [_config(args, fraction) for fraction in args.fractions]
        rows = sweep_fractions(chain, args.fractions, configs[0])
        written = emit_sweep(rows, args.out)
        for row in rows:
            print(f"   fraction {row.fraction:.2f}: m={row.m} e_m={row.error:.6f}")
    elif args.command == "approx":
        result = approximate_with_fraction(chain, _config(args, args.fraction))
        written = emit_results(result, args.out)
        print(f"   kept {len(result.chain)} dominant points, e_m={result.error:.6f}")
    else:
        result = fit(chain, _config(args))
        written = emit_results(result, args.out)
        pieces, controls = len(result.piecewise), len(result.curve.controls)
        print(f"   {pieces} Bezier pieces, {controls} controls")

    print(f"✅ Wrote {len(written)} files to {args.out}")
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    try:
        return run(args)
    except ValidationError as e:
        print(f"❌ {_validation_message(e)}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (FitInputError, OSError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (NumericFailure, ArithmeticError) as e:
        logger.debug("Numeric failure", exc_info=True)
        print(f"❌ Fit failed: {e}", file=sys.stderr)
        return EXIT_NUMERIC_FAILURE


if __name__ == "__main__":
    sys.exit(main())
