"""Experiment runner - sweeps, experiment files, CSV output, and self-validation."""

from .config_file import build_experiment_spec, parse_experiment_file, parse_value, read_experiment_file
from .output import CSV_COLUMNS, curve_csv_text, format_ber, read_curve_csv, write_curve_csv
from .registry import CheckRegistry, RegisteredCheck
from .runner import cmd_analytic, cmd_simulate, point_seed, resolve_workers, run_sweep
from .schemas import BerCurvePoint, ExperimentSpec, SnrRange, SweepPoint
from .validation import CheckResult, ValidationReport, cmd_validate

__all__ = [
    # Schemas
    "BerCurvePoint",
    "ExperimentSpec",
    "SnrRange",
    "SweepPoint",
    # Experiment files
    "parse_experiment_file",
    "read_experiment_file",
    "build_experiment_spec",
    "parse_value",
    # Sweeps
    "cmd_analytic",
    "cmd_simulate",
    "run_sweep",
    "resolve_workers",
    "point_seed",
    # CSV
    "CSV_COLUMNS",
    "format_ber",
    "write_curve_csv",
    "curve_csv_text",
    "read_curve_csv",
    # Validation
    "CheckRegistry",
    "RegisteredCheck",
    "CheckResult",
    "ValidationReport",
    "cmd_validate",
]
