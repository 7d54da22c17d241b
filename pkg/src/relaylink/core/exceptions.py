"""Custom exceptions with problem-detail metadata and CLI exit codes."""

from __future__ import annotations

from typing import Any


class ErrorType:
    """URN-based error type identifiers."""

    INVALID_PARAMETER = "urn:relaylink:error:invalid-parameter"
    NEAR_SINGULAR = "urn:relaylink:error:near-singular-parameters"
    NON_CONVERGENCE = "urn:relaylink:error:non-convergence"
    CONFIG_FILE = "urn:relaylink:error:config-file"
    VALIDATION_FAILED = "urn:relaylink:error:validation-failed"
    INTERNAL_ERROR = "urn:relaylink:error:internal"


class ExitCode:
    """Process exit statuses used by the command-line runner."""

    SUCCESS = 0
    VALIDATION_FAILURE = 1
    USAGE_ERROR = 2


class RelaylinkException(Exception):
    """Base exception for relaylink with problem-detail support."""

    def __init__(
        self,
        detail: str,
        *,
        type_uri: str = ErrorType.INTERNAL_ERROR,
        title: str = "Internal Error",
        exit_code: int = ExitCode.VALIDATION_FAILURE,
        **extensions: Any,
    ) -> None:
        super().__init__(detail)
        self.type_uri = type_uri
        self.title = title
        self.exit_code = exit_code
        self.detail = detail
        self.extensions = extensions


class InvalidParameterError(RelaylinkException):
    """A parameter is outside its valid domain (usage error)."""

    def __init__(self, detail: str, **extensions: Any) -> None:
        super().__init__(
            detail,
            type_uri=ErrorType.INVALID_PARAMETER,
            title="Invalid Parameter",
            exit_code=ExitCode.USAGE_ERROR,
            **extensions,
        )


class NearSingularParametersError(RelaylinkException):
    """A closed form hit one of its removable singularities."""

    def __init__(self, detail: str, **extensions: Any) -> None:
        super().__init__(
            detail,
            type_uri=ErrorType.NEAR_SINGULAR,
            title="Near-Singular Parameters",
            exit_code=ExitCode.USAGE_ERROR,
            **extensions,
        )


class NonConvergenceError(RelaylinkException):
    """Numerical integration did not meet its error budget."""

    def __init__(self, detail: str, **extensions: Any) -> None:
        super().__init__(
            detail,
            type_uri=ErrorType.NON_CONVERGENCE,
            title="Integration Did Not Converge",
            exit_code=ExitCode.VALIDATION_FAILURE,
            **extensions,
        )


class ConfigFileError(RelaylinkException):
    """Experiment file could not be parsed; carries the offending line number."""

    def __init__(self, detail: str, *, line: int | None = None, **extensions: Any) -> None:
        super().__init__(
            detail,
            type_uri=ErrorType.CONFIG_FILE,
            title="Invalid Experiment File",
            exit_code=ExitCode.USAGE_ERROR,
            line=line,
            **extensions,
        )
        self.line = line


class ValidationFailedError(RelaylinkException):
    """One or more self-validation checks failed."""

    def __init__(self, detail: str, **extensions: Any) -> None:
        super().__init__(
            detail,
            type_uri=ErrorType.VALIDATION_FAILED,
            title="Validation Failed",
            exit_code=ExitCode.VALIDATION_FAILURE,
            **extensions,
        )
