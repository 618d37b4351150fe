"""
karyx command-line entry point.

    karyx <command> --input FILE [--method M] [--weights w1,w2,...]
          [--format json|table|csv] [--check] [--normalize] [--output FILE]
          [--n N --k K --trials T --seed S --tol EPS]
"""
import argparse
import sys
from typing import Optional, Sequence

from dotenv import load_dotenv
from loguru import logger
from pydantic import ValidationError

from .config import Settings
from .exceptions import EXIT_USAGE, KaryxError, UsageError
from .models.schemas import COMMANDS, FORMATS, METHOD_NAMES, RunConfig
from .routes.commands import COMMAND_HANDLERS


def _weights(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"--weights expects a comma-separated list of numbers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="karyx", description="Importance indices for k-ary games")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", help="game, Moebius or GAI file (JSON)")
    parser.add_argument("--output", help="write the result here instead of stdout")
    parser.add_argument("--method", choices=METHOD_NAMES, help="index to compute (default: paper)")
    parser.add_argument("--weights", type=_weights, help="Hsiao-Raghavan weights w1,...,wk")
    parser.add_argument("--format", choices=FORMATS, default="json")
    parser.add_argument("--check", action="store_true", help="also print the sum identity check")
    parser.add_argument("--normalize", action="store_true", help="shift the input so v(0_N) = 0")
    parser.add_argument("--n", type=int, help="number of attributes (verify)")
    parser.add_argument("--k", type=int, help="top level (verify)")
    parser.add_argument("--trials", type=int)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--tol", type=float, dest="tolerance")
    return parser


def _configure_logging(level: str) -> None:
    logger.remove()
    logger.add(sys.stderr, level=level, format="<level>{level: <8}</level> {message}")


def build_config(args: argparse.Namespace, settings: Settings) -> RunConfig:
    """Command-line flags win over KARYX_* settings"""
    try:
        return RunConfig(
            command=args.command,
            input=args.input,
            output=args.output,
            method=args.method,
            weights=args.weights,
            format=args.format,
            check=args.check,
            normalize=args.normalize,
            n=args.n,
            k=args.k,
            seed=settings.seed if args.seed is None else args.seed,
            trials=settings.trials if args.trials is None else args.trials,
            tolerance=settings.tolerance if args.tolerance is None else args.tolerance,
            hr_zero_level=settings.hr_zero_level,
        )
    except ValidationError as e:
        messages = "; ".join(err["msg"] for err in e.errors())
        raise UsageError(f"Invalid arguments: {messages}") from e


def main(argv: Optional[Sequence[str]] = None) -> int:
    load_dotenv()
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else 0
    try:
        settings = Settings.from_env()
        _configure_logging(settings.log_level)
        config = build_config(args, settings)
        logger.debug(f"Running {config.command} with {config.model_dump(exclude_none=True)}")
        return COMMAND_HANDLERS[config.command](config)
    except KaryxError as e:
        print(f"❌ karyx: {e.detail}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
