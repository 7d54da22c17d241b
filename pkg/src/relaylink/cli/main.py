"""Command-line entry point: ``relaylink analytic|simulate|validate``."""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from typing import Any

from ..core.exceptions import ExitCode, InvalidParameterError, RelaylinkException, ValidationFailedError
from ..core.logging import configure_logging, get_logger
from ..core.schemas import ProblemDetail
from .config_file import VALUE_PARSERS, build_experiment_spec, parse_experiment_file, parse_value
from .output import write_curve_csv
from .registry import CheckRegistry
from .runner import cmd_analytic, cmd_simulate
from .schemas import ExperimentSpec
from .validation import cmd_validate

logger = get_logger(__name__)

# experiment-file key -> flag help
SWEEP_FLAGS = {
    "schemes": "comma-separated schemes: fscr, dsc, sr",
    "k": "comma-separated relay counts",
    "d": "comma-separated relay-cluster positions in (0, 1)",
    "nu": "path-loss exponent",
    "snr": "Es/N0 axis START:STEP:STOP in dB",
    "trials": "symbols per simulated point",
    "seed": "sweep seed",
    "min_errors": "error count that ends a simulated point early (0 disables)",
    "out": "CSV destination (stdout when absent)",
}


def _add_sweep_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="FILE", help="experiment file of 'key = value' lines")
    for key, help_text in SWEEP_FLAGS.items():
        flag = "--" + key.replace("_", "-")
        parser.add_argument(flag, dest=key, metavar=key.upper(), help=help_text)
    parser.add_argument("--workers", type=int, help="concurrent sweep points (default: RELAYLINK_THREADS or CPUs)")


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per mode."""
    parser = argparse.ArgumentParser(
        prog="relaylink",
        description="Closed-form and simulated BER of opportunistic decode-and-forward relaying.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    analytic = commands.add_parser("analytic", help="closed-form and asymptotic BER curves")
    _add_sweep_arguments(analytic)
    simulate = commands.add_parser("simulate", help="closed-form, asymptotic, and simulated BER curves")
    _add_sweep_arguments(simulate)

    validate = commands.add_parser("validate", help="run the self-validation suite")
    validate.add_argument("--check", action="append", dest="checks", metavar="NAME", help="run only this check")
    validate.add_argument("--list", action="store_true", help="list the available checks and exit")
    return parser


def spec_from_args(args: argparse.Namespace) -> ExperimentSpec:
    """Experiment from ``--config`` with flags layered on top, or from flags alone."""
    overrides: dict[str, Any] = {
        key: parse_value(key, value) for key in VALUE_PARSERS if (value := getattr(args, key, None)) is not None
    }
    if args.config is not None:
        return parse_experiment_file(args.config, overrides)
    return build_experiment_spec(overrides)


def _sweep(args: argparse.Namespace) -> int:
    spec = spec_from_args(args)
    if args.workers is not None and args.workers < 1:
        raise InvalidParameterError(f"--workers must be positive, got {args.workers}", field="workers")
    rows = cmd_simulate(spec, args.workers) if args.command == "simulate" else cmd_analytic(spec, args.workers)
    write_curve_csv(rows, spec.out if spec.out is not None else sys.stdout)
    logger.info("sweep_written", rows=len(rows), out=str(spec.out) if spec.out else "stdout")
    return ExitCode.SUCCESS


def _validate(args: argparse.Namespace) -> int:
    if args.list:
        for check in CheckRegistry.checks():
            print(f"{check.name}  {check.quantity}")
        return ExitCode.SUCCESS
    report = cmd_validate(args.checks)
    print(report.render())
    if not report.ok:
        raise ValidationFailedError(
            f"{len(report.failed)} of {len(report.results)} checks failed",
            failed=[f"{r.name}: {r.quantity}" for r in report.failed],
        )
    return ExitCode.SUCCESS


def main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return the process exit status."""
    configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else ExitCode.USAGE_ERROR

    try:
        if args.command == "validate":
            return _validate(args)
        return _sweep(args)
    except RelaylinkException as exc:
        problem = ProblemDetail.from_exception(exc)
        print(problem.model_dump_json(), file=sys.stderr)
        return exc.exit_code


def run() -> None:
    """Console-script entry point."""
    sys.exit(main())
