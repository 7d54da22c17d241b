"""Scalar SNR algebra shared by every closed form."""

from __future__ import annotations

import math

from .exceptions import InvalidParameterError


def db_to_linear(snr_db: float) -> float:
    """Convert a decibel SNR to linear scale."""
    if not math.isfinite(snr_db):
        raise InvalidParameterError(f"snr_db must be finite, got {snr_db!r}", field="snr_db")
    return 10.0 ** (snr_db / 10.0)


def linear_to_db(snr: float) -> float:
    """Convert a linear SNR to decibels."""
    if snr <= 0.0:
        raise InvalidParameterError(f"linear SNR must be positive, got {snr!r}", field="snr")
    return 10.0 * math.log10(snr)


def bottleneck_avg(gbar_sr: float, gbar_rd: float) -> float:
    """Mean of min(gamma_sr, gamma_rd) for independent exponential hops."""
    if gbar_sr <= 0.0 or gbar_rd <= 0.0:
        raise InvalidParameterError(
            f"average SNRs must be positive, got gbar_sr={gbar_sr!r}, gbar_rd={gbar_rd!r}",
            field="gbar_sr" if gbar_sr <= 0.0 else "gbar_rd",
        )
    return gbar_sr * gbar_rd / (gbar_sr + gbar_rd)
