"""Closed-form end-to-end BER of fixed selection, distributed selection, and selection relaying.

Each hop error probability is the BPSK error average of a selected-hop
mixture; substituting the closed-form average of one exponential term into
the mixture turns every integral into two alternating binomial sums. Those
sums cancel by roughly ``(K - 1) log10(gbar)`` digits at high SNR, so they are
evaluated with ``decimal`` at a precision that grows with K and the largest
average SNR before being rounded back to float.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from decimal import Decimal, localcontext

from scipy.optimize import brentq

from ...core.exceptions import InvalidParameterError, NearSingularParametersError
from ...core.geometry import avg_snrs_from_geometry
from ...core.logging import get_logger
from ...core.schemas import AvgSnrTriple, NetworkGeometry, SchemeKind, check_relay_count
from ..stats.distributions import mean_selected_hop
from ..stats.schemas import RelayHopRole, SingularityPolicy
from ..stats.series import hop_mixture_sums
from ..stats.singularity import resolve_singularity
from .identities import l_of_alpha_decimal, theta_of_a_decimal
from .schemas import BerBreakdown

logger = get_logger(__name__)

BASE_DIGITS = 40


def working_precision(snrs: AvgSnrTriple, k: int) -> int:
    """Decimal digits needed to keep the alternating sums accurate to double precision."""
    decades = math.ceil(math.log10(max(1.0, snrs.largest))) + 1
    return BASE_DIGITS + (k + 1) * decades


def _probability(value: Decimal) -> float:
    return min(1.0, max(0.0, float(value)))


def _hop_error_sums(
    a: Decimal,
    b: Decimal,
    gbar: Decimal,
    k: int,
    kernel: Callable[[Decimal], Decimal],
) -> tuple[Decimal, Decimal]:
    """Totals of the two alternating sums of a hop error mixture."""
    first, second = hop_mixture_sums(a, b, gbar, k, kernel)
    return sum(first, Decimal(0)), sum(second, Decimal(0))


type KernelFactory = Callable[[Decimal], Callable[[Decimal], Decimal]]


def _hop_error(snrs: AvgSnrTriple, k: int, role: RelayHopRole, kernel_factory: KernelFactory) -> float:
    """Evaluate a hop error mixture for the kernel built from the direct-link average."""
    check_relay_count(k)
    with localcontext(prec=working_precision(snrs, k)):
        sd, sr, rd = Decimal(snrs.gbar_sd), Decimal(snrs.gbar_sr), Decimal(snrs.gbar_rd)
        gbar = sr * rd / (sr + rd)
        a, b = (sr, rd) if role == RelayHopRole.relay_to_destination else (rd, sr)
        first, second = _hop_error_sums(a, b, gbar, k, kernel_factory(sd))
        return _probability(first + second)


def _l_kernel(_: Decimal) -> Callable[[Decimal], Decimal]:
    return l_of_alpha_decimal


def _theta_kernel(sd: Decimal) -> Callable[[Decimal], Decimal]:
    u = 1 + 1 / sd
    return lambda rate: theta_of_a_decimal(rate, u)


def _mrc_kernel(sd: Decimal) -> Callable[[Decimal], Decimal]:
    s = 1 / sd
    l_direct = l_of_alpha_decimal(s)

    def kernel(rate: Decimal) -> Decimal:
        if rate == s:
            raise NearSingularParametersError("direct-link rate coincides with a mixture rate", rate=str(rate))
        return s * (l_direct - l_of_alpha_decimal(rate)) / (rate - s)

    return kernel


# Hop and combiner error probabilities


def p_prop(snrs: AvgSnrTriple, k: int) -> float:
    """Approximate probability that a relay decoding error causes a destination error."""
    mean_rd = mean_selected_hop(snrs, k, RelayHopRole.relay_to_destination)
    return mean_rd / (mean_rd + snrs.gbar_sd)


def p_sr_star(snrs: AvgSnrTriple, k: int) -> float:
    """BER of the source to selected-relay hop."""
    return _hop_error(snrs, k, RelayHopRole.source_to_relay, _l_kernel)


def p_rstar_d(snrs: AvgSnrTriple, k: int) -> float:
    """BER of the selected-relay to destination hop."""
    return _hop_error(snrs, k, RelayHopRole.relay_to_destination, _l_kernel)


def i2_term(snrs: AvgSnrTriple, k: int) -> float:
    """Part of the second-hop BER removed when the direct branch wins selection combining."""
    return _hop_error(snrs, k, RelayHopRole.relay_to_destination, _theta_kernel)


def p_dsc(snrs: AvgSnrTriple, k: int) -> float:
    """BER of the selection-combining detector given a correct relay symbol."""
    check_relay_count(k)
    with localcontext(prec=working_precision(snrs, k)):
        sd, sr, rd = Decimal(snrs.gbar_sd), Decimal(snrs.gbar_sr), Decimal(snrs.gbar_rd)
        gbar = sr * rd / (sr + rd)
        i1 = sum(_hop_error_sums(sr, rd, gbar, k, _l_kernel(sd)), Decimal(0))
        i2 = sum(_hop_error_sums(sr, rd, gbar, k, _theta_kernel(sd)), Decimal(0))
        return _probability(i1 - i2)


def _p_mrc(snrs: AvgSnrTriple, k: int, policy: SingularityPolicy) -> tuple[float, bool]:
    check_relay_count(k)
    snrs, jittered = resolve_singularity(snrs, k, policy)
    return _hop_error(snrs, k, RelayHopRole.relay_to_destination, _mrc_kernel), jittered


def p_mrc(snrs: AvgSnrTriple, k: int, policy: SingularityPolicy = SingularityPolicy.jitter) -> float:
    """BER of the MRC detector combining the direct and selected-relay branches."""
    return _p_mrc(snrs, k, policy)[0]


# End-to-end BER


def _compose(scheme: SchemeKind, k: int, prop: float, sr_star: float, combiner: float, jittered: bool) -> BerBreakdown:
    return BerBreakdown(
        scheme=scheme,
        k=k,
        p_prop=prop,
        p_sr_star=sr_star,
        p_combiner=combiner,
        p_end_to_end=min(1.0, prop * sr_star + (1.0 - sr_star) * combiner),
        jittered=jittered,
    )


def ber_fscr(snrs: AvgSnrTriple, k: int, policy: SingularityPolicy = SingularityPolicy.jitter) -> BerBreakdown:
    """Fixed selection cooperative relaying: MRC of the direct and selected-relay branches."""
    combiner, jittered = _p_mrc(snrs, k, policy)
    return _compose(SchemeKind.fscr, k, p_prop(snrs, k), p_sr_star(snrs, k), combiner, jittered)


def ber_dsc(snrs: AvgSnrTriple, k: int, policy: SingularityPolicy = SingularityPolicy.jitter) -> BerBreakdown:
    """Distributed selection combining: the destination keeps the stronger of the two branches."""
    return _compose(SchemeKind.dsc, k, p_prop(snrs, k), p_sr_star(snrs, k), p_dsc(snrs, k), False)


def ber_sr(snrs: AvgSnrTriple, k: int, policy: SingularityPolicy = SingularityPolicy.jitter) -> BerBreakdown:
    """Selection relaying: the destination decodes the relayed branch only."""
    return _compose(SchemeKind.sr, k, 1.0, p_sr_star(snrs, k), p_rstar_d(snrs, k), False)


BER_CHAINS: dict[SchemeKind, Callable[[AvgSnrTriple, int, SingularityPolicy], BerBreakdown]] = {
    SchemeKind.fscr: ber_fscr,
    SchemeKind.dsc: ber_dsc,
    SchemeKind.sr: ber_sr,
}


def ber_end_to_end(
    scheme: SchemeKind,
    snrs: AvgSnrTriple,
    k: int,
    policy: SingularityPolicy = SingularityPolicy.jitter,
) -> BerBreakdown:
    """Dispatch to the closed-form chain of a scheme."""
    return BER_CHAINS[SchemeKind(scheme)](snrs, k, policy)


def snr_at_ber(
    scheme: SchemeKind,
    target: float,
    k: int,
    geometry: NetworkGeometry,
    lo_db: float = -10.0,
    hi_db: float = 60.0,
) -> float:
    """Es/N0 in decibels at which a scheme reaches a target BER on the linear network."""
    if not 0.0 < target < 0.5:
        raise InvalidParameterError(f"target BER must lie in (0, 0.5), got {target!r}", field="target")

    def gap(snr_db: float) -> float:
        ber = ber_end_to_end(scheme, avg_snrs_from_geometry(geometry, snr_db), k).p_end_to_end
        return math.log10(max(ber, 1e-300)) - math.log10(target)

    lo_gap, hi_gap = gap(lo_db), gap(hi_db)
    if lo_gap < 0.0 or hi_gap > 0.0:
        raise InvalidParameterError(
            f"target BER {target:g} is not reached between {lo_db} dB and {hi_db} dB",
            field="target",
            valid=f"BER range [{10 ** (hi_gap + math.log10(target)):.3e}, {10 ** (lo_gap + math.log10(target)):.3e}]",
        )
    return float(brentq(gap, lo_db, hi_db, xtol=1e-6))
