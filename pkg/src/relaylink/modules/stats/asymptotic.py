"""Small-argument approximations of the selected-hop and combined-SNR statistics.

These leading terms drive the high-SNR BER asymptotes. The second-hop CDF
behaves as ``(1/gbar_rd) (1/gbar)^(K-1) z^K`` near the origin, the integral
of the first-hop density approximation.
"""

from __future__ import annotations

import numpy as np

from ...core.schemas import AvgSnrTriple, check_relay_count
from ...core.types import RealInput, RealOutput, as_output
from .distributions import _positive, _support


def approx_pdf_srstar(y: RealInput, snrs: AvgSnrTriple, k: int) -> RealOutput:
    """Leading term of the first-hop density of the selected relay."""
    check_relay_count(k)
    arr, scalar = _support(y, "y")
    values = (k / snrs.gbar_sr) * snrs.gbar ** (1 - k) * np.power(arr, k - 1)
    return as_output(values, scalar)


def approx_pdf_beta(beta: RealInput, snrs: AvgSnrTriple, k: int) -> RealOutput:
    """Leading term of the MRC output density."""
    check_relay_count(k)
    arr, scalar = _support(beta, "beta")
    values = np.power(arr, k) / (snrs.gbar_sd * snrs.gbar_rd) * snrs.gbar ** (1 - k)
    return as_output(values, scalar)


def approx_cdf_sd(z: RealInput, gbar_sd: float) -> RealOutput:
    """Leading term of the direct-link CDF."""
    _positive(gbar_sd, "gbar_sd")
    arr, scalar = _support(z, "z")
    return as_output(arr / gbar_sd, scalar)


def approx_cdf_rstar_d(z: RealInput, snrs: AvgSnrTriple, k: int) -> RealOutput:
    """Leading term of the second-hop CDF of the selected relay."""
    check_relay_count(k)
    arr, scalar = _support(z, "z")
    values = np.power(arr, k) / snrs.gbar_rd * snrs.gbar ** (1 - k)
    return as_output(values, scalar)
