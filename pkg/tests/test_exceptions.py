"""Tests for the exception hierarchy and its problem-detail rendering."""

import json

import pytest

from relaylink.core import (
    ConfigFileError,
    ErrorType,
    ExitCode,
    InvalidParameterError,
    NearSingularParametersError,
    NonConvergenceError,
    ProblemDetail,
    RelaylinkException,
    ValidationFailedError,
)


def test_relaylink_exception_with_defaults() -> None:
    """The base exception is an internal error with exit status 1."""
    exc = RelaylinkException("Something went wrong")

    assert str(exc) == "Something went wrong"
    assert exc.detail == "Something went wrong"
    assert exc.type_uri == ErrorType.INTERNAL_ERROR
    assert exc.title == "Internal Error"
    assert exc.exit_code == ExitCode.VALIDATION_FAILURE
    assert exc.extensions == {}


def test_relaylink_exception_with_custom_values() -> None:
    """Custom type, title, exit code and extensions are kept."""
    exc = RelaylinkException("Custom", type_uri="urn:custom", title="Custom Error", exit_code=3, extra="value")

    assert exc.type_uri == "urn:custom"
    assert exc.title == "Custom Error"
    assert exc.exit_code == 3
    assert exc.extensions == {"extra": "value"}


@pytest.mark.parametrize(
    ("exc_class", "type_uri", "exit_code"),
    [
        (InvalidParameterError, ErrorType.INVALID_PARAMETER, ExitCode.USAGE_ERROR),
        (NearSingularParametersError, ErrorType.NEAR_SINGULAR, ExitCode.USAGE_ERROR),
        (NonConvergenceError, ErrorType.NON_CONVERGENCE, ExitCode.VALIDATION_FAILURE),
        (ConfigFileError, ErrorType.CONFIG_FILE, ExitCode.USAGE_ERROR),
        (ValidationFailedError, ErrorType.VALIDATION_FAILED, ExitCode.VALIDATION_FAILURE),
    ],
)
def test_subclass_metadata(exc_class: type[RelaylinkException], type_uri: str, exit_code: int) -> None:
    """Every subclass carries its URN and exit status and is a RelaylinkException."""
    exc = exc_class("detail")

    assert isinstance(exc, RelaylinkException)
    assert exc.type_uri == type_uri
    assert exc.type_uri.startswith("urn:relaylink:error:")
    assert exc.exit_code == exit_code


def test_invalid_parameter_names_field() -> None:
    """Field and interval travel as extensions."""
    exc = InvalidParameterError("d out of range", field="d", valid="(0, 1)")
    assert exc.extensions == {"field": "d", "valid": "(0, 1)"}


def test_config_file_error_carries_line() -> None:
    """The line number is both an attribute and an extension."""
    exc = ConfigFileError("bad value", line=3, field="k")
    assert exc.line == 3
    assert exc.extensions["line"] == 3
    assert exc.extensions["field"] == "k"


def test_problem_detail_from_exception_drops_empty_extensions() -> None:
    """The problem detail mirrors the exception and omits None extensions."""
    problem = ProblemDetail.from_exception(ConfigFileError("missing required keys: k", missing=["k"]))
    payload = json.loads(problem.model_dump_json())

    assert payload["type"] == ErrorType.CONFIG_FILE
    assert payload["title"] == "Invalid Experiment File"
    assert payload["exit_code"] == 2
    assert payload["detail"] == "missing required keys: k"
    assert payload["extensions"] == {"missing": ["k"]}
