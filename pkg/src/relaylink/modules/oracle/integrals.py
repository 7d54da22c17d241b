"""Independent numerical routes to the selected-hop and MRC densities.

Nothing here calls the closed forms of the stats module: the selected-hop
density is rebuilt from the conditional density of one relay's second hop given
its bottleneck, averaged over the density of the largest bottleneck, and the
MRC density is a direct convolution.
"""

from __future__ import annotations

import math
from collections.abc import Callable

from ...core.exceptions import InvalidParameterError
from ...core.schemas import AvgSnrTriple, check_relay_count
from ..stats.schemas import RelayHopRole
from .quadrature import quad_interval


def _log_pdf_max_bottleneck(z: float, gbar: float, k: int) -> float:
    """Log density of the largest of K exponential bottlenecks, compact form."""
    log_density = math.log(k / gbar) - z / gbar
    if k > 1:
        log_density += (k - 1) * math.log(-math.expm1(-z / gbar))
    return log_density


def selected_hop_pdf_numeric(
    x: float,
    snrs: AvgSnrTriple,
    k: int,
    role: RelayHopRole = RelayHopRole.relay_to_destination,
    tol: float = 1e-11,
) -> float:
    """Selected-hop density as a quadrature over the bottleneck plus the boundary impulse term.

    The joint law of one relay's hop and its bottleneck ``min(gamma_sr, gamma_rd)``
    has a continuous part for bottlenecks below x and an impulse where the hop
    itself is the bottleneck; the impulse contributes the boundary term.
    """
    check_relay_count(k)
    if x < 0.0:
        raise InvalidParameterError(f"x must be nonnegative, got {x!r}", field="x", valid="[0, inf)")
    if role == RelayHopRole.relay_to_destination:
        other, hop = snrs.gbar_sr, snrs.gbar_rd
    else:
        other, hop = snrs.gbar_rd, snrs.gbar_sr
    gbar = other * hop / (other + hop)
    log_hop = -math.log(hop) - x / hop

    def integrand(z: float) -> float:
        if z <= 0.0 and k > 1:
            return 0.0
        # p_hop(x) * p_other(z) / p_min(z) * p_max(z)
        log_other = -math.log(other) - z / other
        log_min = -math.log(gbar) - z / gbar
        return math.exp(log_hop + log_other - log_min + _log_pdf_max_bottleneck(z, gbar, k))

    if x == 0.0 and k > 1:
        boundary = 0.0
    else:
        # p_hop(x) * P[other > x] / p_min(x) * p_max(x)
        boundary = math.exp(log_hop - x / other + math.log(gbar) + x / gbar + _log_pdf_max_bottleneck(x, gbar, k))
    if x == 0.0:
        return boundary
    return quad_interval(integrand, 0.0, x, tol).value + boundary


def conv_pdf_numeric(
    pdf_a: Callable[[float], float],
    pdf_b: Callable[[float], float],
    beta: float,
    tol: float = 1e-11,
) -> float:
    """Density of a sum of two independent nonnegative variables at ``beta``."""
    if beta < 0.0:
        raise InvalidParameterError(f"beta must be nonnegative, got {beta!r}", field="beta", valid="[0, inf)")
    if beta == 0.0:
        return 0.0
    return quad_interval(lambda x: pdf_a(x) * pdf_b(max(beta - x, 0.0)), 0.0, beta, tol).value
