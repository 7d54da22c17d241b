"""High-SNR asymptotes of the end-to-end BER.

Integrating ``(1/2) erfc(sqrt(x))`` against the leading small-argument terms of
the hop densities gives ``Gamma(K + 1/2) / (2 sqrt(pi))`` for a ``y^(K-1)`` law
and ``Gamma(K + 3/2) / (2 sqrt(pi) (K + 1))`` for a ``beta^K`` law.
"""

from __future__ import annotations

import math
from collections.abc import Callable

from scipy.special import gamma

from ...core.schemas import AvgSnrTriple, SchemeKind, check_relay_count
from .ber import p_prop


def _sr_star_asymptote(snrs: AvgSnrTriple, k: int) -> float:
    return gamma(k + 0.5) / (2.0 * math.sqrt(math.pi)) / snrs.gbar_sr * snrs.gbar ** (1 - k)


def _combined_asymptote(snrs: AvgSnrTriple, k: int) -> float:
    """Asymptote of the selection-combining detector; MRC divides it by K + 1."""
    return gamma(k + 1.5) / (2.0 * math.sqrt(math.pi)) / (snrs.gbar_sd * snrs.gbar_rd) * snrs.gbar ** (1 - k)


def asymp_fscr(snrs: AvgSnrTriple, k: int) -> float:
    """Fixed selection cooperative relaying at high SNR."""
    check_relay_count(k)
    return p_prop(snrs, k) * _sr_star_asymptote(snrs, k) + _combined_asymptote(snrs, k) / (k + 1)


def asymp_dsc(snrs: AvgSnrTriple, k: int) -> float:
    """Distributed selection combining at high SNR."""
    check_relay_count(k)
    return p_prop(snrs, k) * _sr_star_asymptote(snrs, k) + _combined_asymptote(snrs, k)


def asymp_sr(snrs: AvgSnrTriple, k: int) -> float:
    """Selection relaying at high SNR; diversity K since the direct link is unused."""
    check_relay_count(k)
    return float(gamma(k + 0.5) / (2.0 * math.sqrt(math.pi)) * snrs.gbar ** (-k))


ASYMPTOTES: dict[SchemeKind, Callable[[AvgSnrTriple, int], float]] = {
    SchemeKind.fscr: asymp_fscr,
    SchemeKind.dsc: asymp_dsc,
    SchemeKind.sr: asymp_sr,
}


def ber_asymptotic(scheme: SchemeKind, snrs: AvgSnrTriple, k: int) -> float:
    """Dispatch to the high-SNR asymptote of a scheme."""
    return float(ASYMPTOTES[SchemeKind(scheme)](snrs, k))
