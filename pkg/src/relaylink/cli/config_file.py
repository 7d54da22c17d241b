"""Line-oriented ``key = value`` experiment files."""

from __future__ import annotations

from collections.abc import Callable, Mapping
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from ..core.exceptions import ConfigFileError, InvalidParameterError
from ..core.schemas import MAX_RELAYS, SchemeKind
from ..modules.simlink.schemas import MAX_SEED
from .schemas import ExperimentSpec, SnrRange

REQUIRED_KEYS = ("schemes", "k", "d")


class ValueFormatError(ValueError):
    """A value failed to parse; carries the key and, when known, its valid interval."""

    def __init__(self, key: str, message: str, valid: str | None = None) -> None:
        super().__init__(message)
        self.key = key
        self.valid = valid


def _items(text: str) -> list[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


def _parse_schemes(text: str) -> tuple[SchemeKind, ...]:
    schemes: list[SchemeKind] = []
    for item in _items(text):
        try:
            scheme = SchemeKind(item.lower())
        except ValueError:
            raise ValueFormatError("schemes", f"unknown scheme {item!r}", valid="fscr, dsc, sr") from None
        if scheme not in schemes:
            schemes.append(scheme)
    if not schemes:
        raise ValueFormatError("schemes", "at least one scheme is required", valid="fscr, dsc, sr")
    return tuple(schemes)


def _parse_ks(text: str) -> tuple[int, ...]:
    valid = f"[1, {MAX_RELAYS}]"
    values: list[int] = []
    for item in _items(text):
        try:
            k = int(item)
        except ValueError:
            raise ValueFormatError("k", f"k must be an integer, got {item!r}", valid=valid) from None
        if not 1 <= k <= MAX_RELAYS:
            raise ValueFormatError("k", f"k = {k} is outside the valid interval {valid}", valid=valid)
        values.append(k)
    if not values:
        raise ValueFormatError("k", "at least one relay count is required", valid=valid)
    return tuple(values)


def _parse_ds(text: str) -> tuple[float, ...]:
    valid = "(0, 1)"
    values: list[float] = []
    for item in _items(text):
        try:
            d = float(item)
        except ValueError:
            raise ValueFormatError("d", f"d must be a number, got {item!r}", valid=valid) from None
        if not 0.0 < d < 1.0:
            raise ValueFormatError("d", f"d = {item} is outside the valid interval {valid}", valid=valid)
        values.append(d)
    if not values:
        raise ValueFormatError("d", "at least one cluster position is required", valid=valid)
    return tuple(values)


def _parse_nu(text: str) -> float:
    try:
        nu = float(text)
    except ValueError:
        raise ValueFormatError("nu", f"nu must be a number, got {text!r}", valid="[0, inf)") from None
    if not nu >= 0.0 or nu == float("inf"):
        raise ValueFormatError("nu", f"nu = {text} is outside the valid interval [0, inf)", valid="[0, inf)")
    return nu


def _parse_snr(text: str) -> SnrRange:
    try:
        return SnrRange.parse(text)
    except (ValueError, ValidationError) as exc:
        message = exc.errors()[0]["msg"] if isinstance(exc, ValidationError) else str(exc)
        raise ValueFormatError("snr", f"snr: {message}", valid="START:STEP:STOP with STEP > 0") from None


def _integer(key: str, low: int, high: int | None) -> Callable[[str], int]:
    valid = f"[{low}, {high if high is not None else 'inf'}]"

    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise ValueFormatError(key, f"{key} must be an integer, got {text!r}", valid=valid) from None
        if value < low or (high is not None and value > high):
            raise ValueFormatError(key, f"{key} = {text} is outside the valid interval {valid}", valid=valid)
        return value

    return parse


VALUE_PARSERS: dict[str, Callable[[str], Any]] = {
    "schemes": _parse_schemes,
    "k": _parse_ks,
    "d": _parse_ds,
    "nu": _parse_nu,
    "snr": _parse_snr,
    "trials": _integer("trials", 1, None),
    "seed": _integer("seed", 0, MAX_SEED),
    "min_errors": _integer("min_errors", 0, None),
    "out": Path,
}


def parse_value(key: str, text: str) -> Any:
    """Parse one setting given in file syntax; raises InvalidParameterError on bad input."""
    try:
        return VALUE_PARSERS[key](text.strip())
    except ValueFormatError as exc:
        raise InvalidParameterError(str(exc), field=exc.key, valid=exc.valid) from None


def read_experiment_file(path: Path | str) -> dict[str, Any]:
    """Parse an experiment file into validated settings without checking required keys."""
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise ConfigFileError(f"cannot read experiment file {str(path)!r}: {exc.strerror}", path=str(path)) from None

    settings: dict[str, Any] = {}
    seen: dict[str, int] = {}
    for number, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigFileError(f"line {number}: expected 'key = value', got {raw.strip()!r}", line=number)
        key, _, value = (part.strip() for part in line.partition("="))
        key = key.lower()
        if key not in VALUE_PARSERS:
            raise ConfigFileError(
                f"line {number}: unknown key {key!r}",
                line=number,
                field=key,
                valid=", ".join(VALUE_PARSERS),
            )
        if key in seen:
            raise ConfigFileError(f"line {number}: key {key!r} already set on line {seen[key]}", line=number, field=key)
        try:
            settings[key] = VALUE_PARSERS[key](value)
        except ValueFormatError as exc:
            raise ConfigFileError(f"line {number}: {exc}", line=number, field=exc.key, valid=exc.valid) from None
        seen[key] = number
    return settings


def build_experiment_spec(settings: Mapping[str, Any]) -> ExperimentSpec:
    """Assemble an experiment from parsed settings, reporting missing keys together."""
    missing = [key for key in REQUIRED_KEYS if key not in settings]
    if missing:
        raise ConfigFileError(f"missing required keys: {', '.join(missing)}", missing=missing)
    try:
        return ExperimentSpec(**settings)
    except ValidationError as exc:
        error = exc.errors()[0]
        field = ".".join(str(part) for part in error["loc"])
        raise InvalidParameterError(f"{field}: {error['msg']}", field=field) from None


def parse_experiment_file(path: Path | str, overrides: Mapping[str, Any] | None = None) -> ExperimentSpec:
    """Read an experiment file and apply already-parsed overrides on top of it."""
    settings = read_experiment_file(path)
    settings.update(overrides or {})
    return build_experiment_spec(settings)
