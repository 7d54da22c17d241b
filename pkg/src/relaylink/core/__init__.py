"""Core components - link parameters, geometry, errors, logging, and the job scheduler."""

# ruff: noqa: F401

from .exceptions import (
    ConfigFileError,
    ErrorType,
    ExitCode,
    InvalidParameterError,
    NearSingularParametersError,
    NonConvergenceError,
    RelaylinkException,
    ValidationFailedError,
)
from .geometry import avg_snrs_from_geometry, avg_snrs_from_variances, link_variances
from .logging import configure_logging, get_logger, log_context, reset_context
from .scheduler import AIOJobScheduler
from .schemas import (
    MAX_RELAYS,
    AvgSnrTriple,
    JobRecord,
    JobStatus,
    LinkVariances,
    NetworkGeometry,
    ProblemDetail,
    RelayCount,
    SchemeKind,
    check_relay_count,
)
from .snr import bottleneck_avg, db_to_linear, linear_to_db

__all__ = [
    # Link parameters
    "MAX_RELAYS",
    "RelayCount",
    "check_relay_count",
    "SchemeKind",
    "NetworkGeometry",
    "LinkVariances",
    "AvgSnrTriple",
    # SNR algebra and geometry
    "db_to_linear",
    "linear_to_db",
    "bottleneck_avg",
    "link_variances",
    "avg_snrs_from_variances",
    "avg_snrs_from_geometry",
    # Schemas
    "ProblemDetail",
    "JobRecord",
    "JobStatus",
    # Job scheduling
    "AIOJobScheduler",
    # Exceptions
    "ErrorType",
    "ExitCode",
    "RelaylinkException",
    "InvalidParameterError",
    "NearSingularParametersError",
    "NonConvergenceError",
    "ConfigFileError",
    "ValidationFailedError",
    # Logging
    "configure_logging",
    "get_logger",
    "log_context",
    "reset_context",
]
