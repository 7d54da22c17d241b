"""Exact PDFs, CDFs and moments of the SNRs seen by the opportunistic relaying schemes.

All functions take linear SNRs, accept a scalar or an array for the point of
evaluation, and return the same shape. Averages are carried by ``AvgSnrTriple``.
"""

from __future__ import annotations

from typing import Any

import numpy as np

from ...core.exceptions import InvalidParameterError
from ...core.schemas import AvgSnrTriple, check_relay_count
from ...core.types import RealInput, RealOutput, as_output
from .schemas import RelayHopRole, SingularityPolicy
from .series import (
    alternating_binomial,
    compensated_sum,
    decay,
    exp_difference_quotient,
    hop_averages,
    hop_mixture_sums,
    psi,
)
from .singularity import resolve_singularity


def _support(x: RealInput, name: str) -> tuple[Any, bool]:
    """Validate a point of evaluation on [0, inf) and remember whether it was scalar."""
    arr = np.asarray(x, dtype=np.float64)
    if np.any(np.isnan(arr)) or np.any(arr < 0.0):
        raise InvalidParameterError(f"{name} must be nonnegative, got {x!r}", field=name, valid="[0, inf)")
    return arr, arr.ndim == 0


def _positive(value: float, name: str) -> None:
    if not value > 0.0:
        raise InvalidParameterError(f"{name} must be positive, got {value!r}", field=name, valid="(0, inf)")


# Direct link


def pdf_gamma_sd(y: RealInput, gbar_sd: float) -> RealOutput:
    """Exponential density of the direct-link SNR."""
    _positive(gbar_sd, "gbar_sd")
    arr, scalar = _support(y, "y")
    return as_output(decay(1.0 / gbar_sd, arr) / gbar_sd, scalar)


def cdf_gamma_sd(x: RealInput, gbar_sd: float) -> RealOutput:
    """Exponential CDF of the direct-link SNR."""
    _positive(gbar_sd, "gbar_sd")
    arr, scalar = _support(x, "x")
    return as_output(-np.expm1(-arr / gbar_sd), scalar)


# Selected relay hops


def pdf_selected_hop(
    x: RealInput,
    snrs: AvgSnrTriple,
    k: int,
    role: RelayHopRole = RelayHopRole.relay_to_destination,
) -> RealOutput:
    """Density of one hop SNR of the relay chosen by the max-min rule.

    ``relay_to_destination`` gives the density of the second hop of the
    selected relay; ``source_to_relay`` the first hop, obtained by exchanging
    the two hop averages.
    """
    check_relay_count(k)
    arr, scalar = _support(x, "x")
    a, b = hop_averages(snrs, role)
    first, second = hop_mixture_sums(a, b, snrs.gbar, k, lambda rate: decay(rate, arr))
    return as_output(np.maximum(compensated_sum(first + second), 0.0), scalar)


def cdf_selected_hop(
    x: RealInput,
    snrs: AvgSnrTriple,
    k: int,
    role: RelayHopRole = RelayHopRole.relay_to_destination,
) -> RealOutput:
    """CDF of one hop SNR of the selected relay."""
    check_relay_count(k)
    arr, scalar = _support(x, "x")
    a, b = hop_averages(snrs, role)
    first, second = hop_mixture_sums(a, b, snrs.gbar, k, lambda rate: psi(rate, arr))
    return as_output(np.clip(compensated_sum(first + second), 0.0, 1.0), scalar)


def mean_selected_hop(
    snrs: AvgSnrTriple,
    k: int,
    role: RelayHopRole = RelayHopRole.relay_to_destination,
) -> float:
    """Mean of one hop SNR of the selected relay."""
    check_relay_count(k)
    a, b = hop_averages(snrs, role)
    first, second = hop_mixture_sums(a, b, snrs.gbar, k, lambda rate: 1.0 / (rate * rate))
    return float(compensated_sum(first + second))


# Combined SNRs


def pdf_beta(
    beta: RealInput,
    snrs: AvgSnrTriple,
    k: int,
    policy: SingularityPolicy = SingularityPolicy.jitter,
) -> RealOutput:
    """Density of the MRC output SNR, the sum of the direct and selected second-hop SNRs."""
    check_relay_count(k)
    arr, scalar = _support(beta, "beta")
    snrs, _ = resolve_singularity(snrs, k, policy)
    s = 1.0 / snrs.gbar_sd

    def kernel(rate: float) -> Any:
        return s * exp_difference_quotient(s, rate, arr)

    first, second = hop_mixture_sums(snrs.gbar_sr, snrs.gbar_rd, snrs.gbar, k, kernel)
    return as_output(np.maximum(compensated_sum(first + second), 0.0), scalar)


def cdf_dsc(x: RealInput, snrs: AvgSnrTriple, k: int) -> RealOutput:
    """CDF of the selection-combining output SNR, the larger of direct and second-hop SNRs."""
    direct = cdf_gamma_sd(x, snrs.gbar_sd)
    relayed = cdf_selected_hop(x, snrs, k, RelayHopRole.relay_to_destination)
    return direct * relayed


# Max of the per-relay bottlenecks


def cdf_max_bottleneck(z: RealInput, gbar: float, k: int) -> RealOutput:
    """CDF of ``max_k min(gamma_sr_k, gamma_rd_k)``."""
    check_relay_count(k)
    _positive(gbar, "gbar")
    arr, scalar = _support(z, "z")
    return as_output((-np.expm1(-arr / gbar)) ** k, scalar)


def pdf_max_bottleneck(z: RealInput, gbar: float, k: int) -> RealOutput:
    """Density of the largest bottleneck SNR in compact form."""
    check_relay_count(k)
    _positive(gbar, "gbar")
    arr, scalar = _support(z, "z")
    values = (k / gbar) * decay(1.0 / gbar, arr) * (-np.expm1(-arr / gbar)) ** (k - 1)
    return as_output(values, scalar)


def pdf_max_bottleneck_expanded(z: RealInput, gbar: float, k: int) -> RealOutput:
    """Density of the largest bottleneck SNR as its binomial expansion."""
    check_relay_count(k)
    _positive(gbar, "gbar")
    arr, scalar = _support(z, "z")
    values = compensated_sum(c * i / gbar * decay(i / gbar, arr) for i, c in alternating_binomial(k))
    return as_output(values, scalar)
