"""Structured logging on stderr with per-sweep context."""

import logging
import os
import sys
from contextlib import AbstractContextManager
from typing import Any, TextIO

import numpy as np
import structlog
from structlog.typing import EventDict, Processor, WrappedLogger

LOG_FORMAT_ENV = "LOG_FORMAT"
LOG_LEVEL_ENV = "LOG_LEVEL"


def plain_numbers(_logger: WrappedLogger, _method: str, event_dict: EventDict) -> EventDict:
    """Replace numpy scalars with Python numbers so JSON output stays numeric."""
    for key, value in event_dict.items():
        if isinstance(value, np.generic):
            event_dict[key] = value.item()
    return event_dict


def _renderers(log_format: str, stream: TextIO) -> list[Processor]:
    if log_format == "json":
        return [structlog.processors.format_exc_info, structlog.processors.JSONRenderer()]
    return [structlog.processors.ExceptionRenderer(), structlog.dev.ConsoleRenderer(colors=stream.isatty())]


def configure_logging(level: str | None = None, log_format: str | None = None, stream: TextIO | None = None) -> None:
    """Route structlog and stdlib records through one handler.

    ``level`` and ``log_format`` fall back to ``LOG_LEVEL`` (default WARNING) and
    ``LOG_FORMAT`` (``console`` or ``json``). Output goes to ``stream``, stderr by default,
    so stdout only ever carries CSV. Python warnings, such as scipy's IntegrationWarning,
    are logged through the same handler.
    """
    level_name = (level or os.getenv(LOG_LEVEL_ENV, "WARNING")).upper()
    numeric_level = getattr(logging, level_name, logging.WARNING)
    log_format = (log_format or os.getenv(LOG_FORMAT_ENV, "console")).lower()
    stream = sys.stderr if stream is None else stream

    pre_chain: list[Processor] = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.add_log_level,
        structlog.processors.TimeStamper(fmt="iso", utc=True),
        plain_numbers,
    ]
    structlog.configure(
        processors=[
            *pre_chain,
            structlog.stdlib.add_logger_name,
            structlog.processors.StackInfoRenderer(),
            structlog.processors.CallsiteParameterAdder(
                [
                    structlog.processors.CallsiteParameter.MODULE,
                    structlog.processors.CallsiteParameter.FUNC_NAME,
                    structlog.processors.CallsiteParameter.LINENO,
                ]
            ),
            structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(numeric_level),
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )

    handler = logging.StreamHandler(stream)
    handler.setFormatter(
        structlog.stdlib.ProcessorFormatter(
            foreign_pre_chain=pre_chain,
            processors=[structlog.stdlib.ProcessorFormatter.remove_processors_meta, *_renderers(log_format, stream)],
        )
    )
    root = logging.getLogger()
    root.handlers.clear()
    root.addHandler(handler)
    root.setLevel(numeric_level)
    logging.captureWarnings(True)


def get_logger(name: str | None = None) -> Any:
    """Lazy structlog logger; picks up the configuration in force at first use."""
    return structlog.get_logger(name)


def log_context(**context: Any) -> AbstractContextManager[None]:
    """Bind ``context`` to every event logged inside the ``with`` block."""
    return structlog.contextvars.bound_contextvars(**context)


def reset_context() -> None:
    structlog.contextvars.clear_contextvars()
