"""Adaptive quadrature on finite and semi-infinite ranges."""

from __future__ import annotations

from collections.abc import Callable

from scipy.integrate import quad

from ...core.exceptions import InvalidParameterError, NonConvergenceError
from ...core.logging import get_logger
from .schemas import QuadratureResult

logger = get_logger(__name__)

MAX_EVALUATIONS = 1_000_000
# Gauss-Kronrod nodes per subinterval in QUADPACK's QAGS
_NODES_PER_INTERVAL = 21


def quad_interval(
    integrand: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-10,
    max_evaluations: int = MAX_EVALUATIONS,
) -> QuadratureResult:
    """Integrate over ``[lo, hi]`` to an absolute error of ``tol``."""
    if not tol > 0.0:
        raise InvalidParameterError(f"tol must be positive, got {tol!r}", field="tol", valid="(0, inf)")
    limit = max(50, max_evaluations // _NODES_PER_INTERVAL)
    out = quad(integrand, lo, hi, epsabs=tol, epsrel=0.0, limit=limit, full_output=1)
    value, abserr, info = float(out[0]), float(out[1]), out[2]
    evaluations = int(info["neval"])
    if abserr > tol:
        message = out[3] if len(out) > 3 else "error budget not met"
        raise NonConvergenceError(
            f"quadrature on [{lo}, {hi}] did not converge: {message}",
            abs_error_estimate=abserr,
            tol=tol,
            evaluations=evaluations,
        )
    if len(out) > 3:
        logger.debug("quadrature_warning", message=out[3], abs_error_estimate=abserr, evaluations=evaluations)
    return QuadratureResult(value=value, abs_error_estimate=abserr, evaluations=evaluations)


def quad_semiinf(
    integrand: Callable[[float], float],
    tol: float = 1e-10,
    *,
    scale: float = 1.0,
    max_evaluations: int = MAX_EVALUATIONS,
) -> QuadratureResult:
    """Integrate over ``[0, inf)`` through ``x = scale * t / (1 - t)`` on ``(0, 1)``.

    ``scale`` should be of the order of the integrand's decay length so the
    mass is not squeezed against ``t = 1``.
    """
    if not scale > 0.0:
        raise InvalidParameterError(f"scale must be positive, got {scale!r}", field="scale", valid="(0, inf)")

    def mapped(t: float) -> float:
        gap = 1.0 - t
        value = integrand(scale * t / gap)
        if value == 0.0:
            return 0.0
        return value * scale / (gap * gap)

    return quad_interval(mapped, 0.0, 1.0, tol, max_evaluations)
