"""
Command-line entry point for the Turing-method toolkit.

    python main.py constants --family zeta --c 1.1 --d 0.75
    python main.py blocks-required --a 2.067 --b 0.0585 --gp-over-2pi 1e12
    python main.py certify --n N --p P --format json
"""

import argparse
import math
import sys
from typing import Dict, List, Optional

from pydantic import ValidationError

from cli.models import Command, LatticeChoice, OutputFormat, RunConfig
from cli.runner import report_error, run
from config import settings
from constants.models import Family
from utils.errors import ParameterError, TuringError
from utils.logging_config import get_logger, setup_logging
from utils.validators import parse_number

logger = get_logger(__name__)

# flag -> parameter key; values stay text so RunConfig parses scientific notation
PARAMETER_FLAGS: Dict[str, str] = {
    "--c": "c",
    "--d": "d",
    "--K": "K",
    "--theta": "theta",
    "--t0": "t0",
    "--gp": "gp",
    "--Q": "Q",
    "--t2": "t2",
    "--degree": "degree",
    "--r1": "r1",
    "--r2": "r2",
    "--abs-discriminant": "abs_discriminant",
    "--a": "a",
    "--b": "b",
    "--g": "g",
    "--n": "n",
    "--p": "p",
    "--t-lo": "t_lo",
    "--t-hi": "t_hi",
    "--samples": "samples",
    "--seed-c": "seed_c",
    "--seed-d": "seed_d",
    "--radius": "radius",
    "--step": "step",
}


def _common_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)

    params = parent.add_argument_group("parameters")
    for flag, key in PARAMETER_FLAGS.items():
        params.add_argument(flag, dest=f"param_{key}", metavar="X", default=None)
    params.add_argument(
        "--gp-over-2pi", dest="gp_over_2pi", metavar="X", default=None,
        help="g_p given as a multiple of 2π",
    )

    parent.add_argument("--family", choices=[f.value for f in Family], default=Family.ZETA.value)
    parent.add_argument("--lattice", choices=[c.value for c in LatticeChoice], default=None)

    out = parent.add_argument_group("output")
    out.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat],
                     default=settings.default_output_format)
    out.add_argument("--output", dest="output_path", default=None, help="Report file (default: stdout)")
    out.add_argument("--digits", type=int, default=None, help="Significant digits in text and CSV")

    tuning = parent.add_argument_group("tuning")
    tuning.add_argument("--threads", type=int, default=None, help="Worker threads for lattice searches")
    tuning.add_argument("--log-level", default=settings.log_level, type=str.upper,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"])
    tuning.add_argument("--tail-tol", default=None, help="Bound on every truncation tail")
    tuning.add_argument("--prime-cutoff", default=None, help="Largest prime in prime-power sums")
    return parent


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per Command."""
    parser = argparse.ArgumentParser(
        prog=settings.app_name,
        description="Explicit constants for Turing's method and certified zero counts",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.app_version}")
    parent = _common_options()
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        Command.CONSTANTS: "Compute (a, b[, g]) at a convexity point",
        Command.OPTIMIZE: "Search a lattice of convexity points",
        Command.BUDGET: "Evaluate a family's objective for given constants",
        Command.BLOCKS_REQUIRED: "Gram blocks needed at g_p",
        Command.GROWTH_CHECK: "Sample |Z(t)|/t^(1/4) against a bound",
        Command.CERTIFY: "Certify N(g_p) from a run of Gram blocks",
    }
    for command, text in helps.items():
        sub.add_parser(command.value, parents=[parent], help=text)
    return parser


def to_config(args: argparse.Namespace) -> RunConfig:
    """
    Build a RunConfig from parsed arguments.

    Raises:
        ParameterError: If --gp and --gp-over-2pi are both given
        pydantic.ValidationError: If a model field fails validation
    """
    parameters = {
        key: getattr(args, f"param_{key}")
        for key in PARAMETER_FLAGS.values()
        if getattr(args, f"param_{key}") is not None
    }
    if args.gp_over_2pi is not None:
        if "gp" in parameters:
            raise ParameterError("Give --gp or --gp-over-2pi, not both", field="gp")
        parameters["gp"] = 2 * math.pi * parse_number(args.gp_over_2pi, "gp_over_2pi")

    return RunConfig(
        command=args.command,
        family=args.family,
        parameters=parameters,
        lattice=args.lattice,
        output_format=args.output_format,
        output_path=args.output_path,
        quadrature={"tail_tol": args.tail_tol, "prime_cutoff": args.prime_cutoff},
        threads=args.threads,
        digits=args.digits,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, run one command and return the exit status.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Process exit status
    """
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level, settings.log_file)

    try:
        config = to_config(args)
    except (TuringError, ValidationError) as e:
        logger.debug(f"Invalid arguments: {e}")
        return report_error(e)

    return run(config)


if __name__ == "__main__":
    sys.exit(main())
