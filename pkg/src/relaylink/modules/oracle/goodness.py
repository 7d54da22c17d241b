"""Goodness-of-fit and diversity-slope estimators."""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence

import numpy as np
import numpy.typing as npt
from scipy.stats import kstest, kstwobign

from ...core.exceptions import InvalidParameterError


def ks_statistic(samples: npt.ArrayLike, cdf: Callable[..., object]) -> float:
    """Kolmogorov-Smirnov distance between the empirical CDF of ``samples`` and ``cdf``."""
    data = np.sort(np.asarray(samples, dtype=np.float64).ravel())
    if data.size == 0:
        raise InvalidParameterError("samples must be nonempty", field="samples")
    return float(kstest(data, cdf).statistic)


def ks_critical_value(n: int, alpha: float = 0.01) -> float:
    """Asymptotic KS critical value at level ``alpha`` for ``n`` samples (1.63 / sqrt(n) at 1%)."""
    if n < 1:
        raise InvalidParameterError(f"n must be positive, got {n!r}", field="n")
    return float(kstwobign.isf(alpha)) / math.sqrt(n)


def slope_fit(points: Sequence[tuple[float, float]]) -> float:
    """Least-squares slope of ``-log10(ber)`` against ``snr_db / 10``, in decades per decade."""
    if len(points) < 2:
        raise InvalidParameterError(f"slope fit needs at least 2 points, got {len(points)}", field="points")
    snr_db = np.array([p[0] for p in points], dtype=np.float64)
    ber = np.array([p[1] for p in points], dtype=np.float64)
    if np.any(~np.isfinite(ber)) or np.any(ber <= 0.0):
        raise InvalidParameterError("slope fit needs strictly positive BER values", field="ber")
    if np.ptp(snr_db) == 0.0:
        raise InvalidParameterError("slope fit needs at least two distinct SNR values", field="snr_db")
    slope, _ = np.polyfit(snr_db / 10.0, -np.log10(ber), 1)
    return float(slope)
