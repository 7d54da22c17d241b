"""Curve-table CSV emission and parsing."""

from __future__ import annotations

import io
from collections.abc import Sequence
from pathlib import Path
from typing import TextIO

import pandas as pd

from ..core.exceptions import InvalidParameterError
from .schemas import BerCurvePoint

CSV_COLUMNS = (
    "snr_db",
    "scheme",
    "k",
    "d",
    "nu",
    "ber_analytic",
    "ber_asymptotic",
    "ber_sim",
    "sim_trials",
    "sim_errors",
    "ci_low",
    "ci_high",
)
BER_FLOOR = 1e-30
_PROBABILITY_COLUMNS = ("ber_analytic", "ber_asymptotic", "ber_sim", "ci_low", "ci_high")
_COUNT_COLUMNS = ("sim_trials", "sim_errors")


def format_ber(value: float | None) -> str:
    """Six significant digits in scientific notation; values below the floor print as 0."""
    if value is None:
        return ""
    if value < BER_FLOOR:
        return "0"
    return f"{value:.5e}"


def _format_row(point: BerCurvePoint) -> dict[str, str]:
    row = {
        "snr_db": f"{point.snr_db:g}",
        "scheme": str(point.scheme),
        "k": str(point.k),
        "d": f"{point.d:g}",
        "nu": f"{point.nu:g}",
    }
    for column in _PROBABILITY_COLUMNS:
        row[column] = format_ber(getattr(point, column))
    for column in _COUNT_COLUMNS:
        value = getattr(point, column)
        row[column] = "" if value is None else str(value)
    return row


def curve_table(points: Sequence[BerCurvePoint]) -> pd.DataFrame:
    """Formatted curve table with the fixed column order."""
    return pd.DataFrame([_format_row(p) for p in points], columns=list(CSV_COLUMNS), dtype=str)


def write_curve_csv(points: Sequence[BerCurvePoint], out: Path | str | TextIO) -> None:
    """Write the curve table as UTF-8 CSV with LF line endings."""
    table = curve_table(points)
    if isinstance(out, (str, Path)):
        with open(out, "w", encoding="utf-8", newline="") as handle:
            table.to_csv(handle, index=False, lineterminator="\n")
    else:
        table.to_csv(out, index=False, lineterminator="\n")


def curve_csv_text(points: Sequence[BerCurvePoint]) -> str:
    """The CSV document as a string."""
    buffer = io.StringIO()
    write_curve_csv(points, buffer)
    return buffer.getvalue()


def _optional_float(text: str) -> float | None:
    return None if text == "" else float(text)


def _optional_int(text: str) -> int | None:
    return None if text == "" else int(text)


def read_curve_csv(source: Path | str | TextIO) -> list[BerCurvePoint]:
    """Parse a curve CSV back into curve points."""
    table = pd.read_csv(source, dtype=str, keep_default_na=False)
    if tuple(table.columns) != CSV_COLUMNS:
        raise InvalidParameterError(
            f"unexpected CSV header: {','.join(table.columns)}",
            field="header",
            valid=",".join(CSV_COLUMNS),
        )
    points: list[BerCurvePoint] = []
    for row in table.to_dict(orient="records"):
        points.append(
            BerCurvePoint(
                snr_db=float(row["snr_db"]),
                scheme=row["scheme"],
                k=int(row["k"]),
                d=float(row["d"]),
                nu=float(row["nu"]),
                ber_analytic=float(row["ber_analytic"]),
                ber_asymptotic=float(row["ber_asymptotic"]),
                ber_sim=_optional_float(row["ber_sim"]),
                sim_trials=_optional_int(row["sim_trials"]),
                sim_errors=_optional_int(row["sim_errors"]),
                ci_low=_optional_float(row["ci_low"]),
                ci_high=_optional_float(row["ci_high"]),
            )
        )
    return points
