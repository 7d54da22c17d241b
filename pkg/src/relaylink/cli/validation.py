"""Run the registered self-validation checks and report the outcome."""

from __future__ import annotations

import time
import traceback
from collections.abc import Sequence

from pydantic import BaseModel, ConfigDict, Field, computed_field

from ..core.exceptions import InvalidParameterError
from ..core.logging import get_logger
from . import checks as _checks  # noqa: F401  # registers the built-in suite
from .registry import CheckRegistry, RegisteredCheck

logger = get_logger(__name__)


class CheckResult(BaseModel):
    """Outcome of one check."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(description="Check name")
    quantity: str = Field(description="Quantity or formula the check exercises")
    passed: bool = Field(description="Whether the check held")
    detail: str | None = Field(default=None, description="Failure message")
    seconds: float = Field(ge=0.0, description="Wall-clock duration")


class ValidationReport(BaseModel):
    """Results of a validation run in execution order."""

    model_config = ConfigDict(frozen=True)

    results: list[CheckResult] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def ok(self) -> bool:
        """True when every check passed."""
        return all(r.passed for r in self.results)

    @property
    def passed(self) -> list[CheckResult]:
        return [r for r in self.results if r.passed]

    @property
    def failed(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def render(self) -> str:
        """Plain-text report, one line per check, failures followed by the quantity and message."""
        lines = []
        for r in self.results:
            lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.name}  ({r.seconds:.2f}s)")
            if not r.passed:
                lines.append(f"      quantity: {r.quantity}")
                lines.append(f"      {r.detail}")
        lines.append(f"{len(self.passed)} passed, {len(self.failed)} failed, {len(self.results)} checks")
        return "\n".join(lines)


def run_check(check: RegisteredCheck) -> CheckResult:
    """Run one check, turning any exception into a failed result."""
    start = time.perf_counter()
    try:
        check.func()
    except AssertionError as exc:
        detail: str | None = str(exc)
    except Exception as exc:
        detail = f"{type(exc).__name__}: {exc}"
        logger.debug("check_errored", check=check.name, traceback=traceback.format_exc())
    else:
        detail = None
    elapsed = time.perf_counter() - start
    if detail is not None:
        logger.warning("check_failed", check=check.name, quantity=check.quantity, detail=detail)
    else:
        logger.info("check_passed", check=check.name, seconds=round(elapsed, 3))
    return CheckResult(name=check.name, quantity=check.quantity, passed=detail is None, detail=detail, seconds=elapsed)


def cmd_validate(names: Sequence[str] | None = None) -> ValidationReport:
    """Run the selected checks, or all of them in registration order."""
    if names:
        try:
            selected = [CheckRegistry.get(name) for name in names]
        except KeyError as exc:
            valid = ", ".join(CheckRegistry.list_all())
            raise InvalidParameterError(str(exc.args[0]), field="check", valid=valid) from None
    else:
        selected = CheckRegistry.checks()
    return ValidationReport(results=[run_check(check) for check in selected])
