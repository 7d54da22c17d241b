"""Built-in self-validation suite run by ``relaylink validate``.

Every check exercises one closed form against an independent route (adaptive
quadrature, numerical convolution, sampling, or the symbol-level simulator)
or one structural property of the BER curves. Checks raise ``CheckFailure``
with the worst offending point; the registry records the quantity each one
covers so a failure names it.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterator
from functools import partial
from itertools import product

import numpy as np
from scipy.special import erfc

from ..core.exceptions import NearSingularParametersError
from ..core.geometry import avg_snrs_from_geometry, link_variances
from ..core.schemas import AvgSnrTriple, NetworkGeometry, SchemeKind
from ..modules.analytic import (
    ber_asymptotic,
    ber_dsc,
    ber_end_to_end,
    ber_fscr,
    l_of_alpha,
    p_dsc,
    p_mrc,
    p_rstar_d,
    p_sr_star,
    snr_at_ber,
    theta_of_a,
)
from ..modules.oracle import (
    conv_pdf_numeric,
    ks_critical_value,
    ks_statistic,
    quad_semiinf,
    selected_hop_pdf_numeric,
    slope_fit,
)
from ..modules.simlink import SimConfig, run_trials, sample_max_bottleneck, sample_selected_hop_snr, wilson_interval
from ..modules.stats import (
    RelayHopRole,
    SingularityPolicy,
    cdf_dsc,
    cdf_gamma_sd,
    cdf_max_bottleneck,
    cdf_selected_hop,
    mean_selected_hop,
    pdf_beta,
    pdf_gamma_sd,
    pdf_max_bottleneck,
    pdf_max_bottleneck_expanded,
    pdf_selected_hop,
)
from .registry import CheckRegistry

RELAY_COUNTS = (1, 2, 4)
CLUSTER_POSITIONS = (0.1, 0.5)
PATH_LOSS_EXPONENTS = (2.0, 3.0)
GRID_SNR_DB = (0.0, 10.0, 20.0, 30.0, 40.0)

QUAD_TOL = 1e-11
CLOSED_FORM_TOL = 1e-8
DENSITY_TOL = 1e-7
DERIVATIVE_TOL = 1e-6

KS_SAMPLES = 1_000_000
# family-wise 1% level shared by every KS comparison of the suite
KS_FAMILY_ALPHA = 0.01
KS_TESTS = 2 * len(RELAY_COUNTS)

SQRT_PI = math.sqrt(math.pi)
ROLES = (RelayHopRole.source_to_relay, RelayHopRole.relay_to_destination)


class CheckFailure(AssertionError):
    """A validation check found a point outside its tolerance."""


def expect(condition: bool, message: str) -> None:
    """Raise ``CheckFailure`` with ``message`` unless ``condition`` holds."""
    if not condition:
        raise CheckFailure(message)


def grid() -> Iterator[tuple[int, float, float, float, AvgSnrTriple]]:
    """Standard grid: every (K, d, nu, snr_db) with its average SNRs."""
    for k, d, nu, snr_db in product(RELAY_COUNTS, CLUSTER_POSITIONS, PATH_LOSS_EXPONENTS, GRID_SNR_DB):
        yield k, d, nu, snr_db, avg_snrs_from_geometry(NetworkGeometry(d=d, nu=nu), snr_db)


def _snrs(d: float, snr_db: float, nu: float = 2.0) -> AvgSnrTriple:
    return avg_snrs_from_geometry(NetworkGeometry(d=d, nu=nu), snr_db)


def _hop_avg(snrs: AvgSnrTriple, role: RelayHopRole) -> float:
    return snrs.gbar_rd if role == RelayHopRole.relay_to_destination else snrs.gbar_sr


def bpsk_average(pdf: Callable[[float], float]) -> float:
    """``integral of (1/2) erfc(sqrt(x)) pdf(x)`` over [0, inf), with ``x = t^2``."""
    return quad_semiinf(lambda t: float(erfc(t)) * t * float(pdf(t * t)), QUAD_TOL).value


def bpsk_average_by_cdf(cdf: Callable[[float], float]) -> float:
    """The same average after integrating by parts against the CDF."""
    return quad_semiinf(lambda t: math.exp(-t * t) / SQRT_PI * float(cdf(t * t)), QUAD_TOL).value


def _worst(label: str, deviations: list[tuple[float, str]], tol: float) -> None:
    deviation, where = max(deviations)
    expect(deviation <= tol, f"{label}: deviation {deviation:.3e} exceeds {tol:g} at {where}")


# Average SNRs


@CheckRegistry.register("bottleneck_below_hops", "bottleneck average gbar = gbar_sr gbar_rd / (gbar_sr + gbar_rd)")
def check_bottleneck_below_hops() -> None:
    """The bottleneck average lies below both hop averages."""
    for k, d, nu, snr_db, snrs in grid():
        expect(
            snrs.gbar < min(snrs.gbar_sr, snrs.gbar_rd),
            f"gbar = {snrs.gbar:g} not below both hops at d={d}, nu={nu}, {snr_db} dB",
        )


@CheckRegistry.register("avg_snrs_scale_with_snr", "linear-network average SNRs")
def check_avg_snrs_scale_with_snr() -> None:
    """Average SNRs grow by exactly the Es/N0 ratio between two operating points."""
    for d, nu in product(CLUSTER_POSITIONS, PATH_LOSS_EXPONENTS):
        low, high = _snrs(d, 10.0, nu), _snrs(d, 30.0, nu)
        for name in ("gbar_sd", "gbar_sr", "gbar_rd", "gbar"):
            ratio = getattr(high, name) / getattr(low, name)
            expect(math.isclose(ratio, 100.0, rel_tol=1e-12), f"{name} ratio {ratio!r} at d={d}, nu={nu}")


# Distributions


@CheckRegistry.register("selected_hop_pdf_normalization", "selected-hop PDF of either hop")
def check_selected_hop_pdf_normalization() -> None:
    """Selected-hop densities integrate to one."""
    deviations = []
    for k, d, snr_db, role in product(RELAY_COUNTS, CLUSTER_POSITIONS, (0.0, 20.0, 40.0), ROLES):
        snrs = _snrs(d, snr_db)
        mass = quad_semiinf(lambda x: pdf_selected_hop(x, snrs, k, role), QUAD_TOL, scale=_hop_avg(snrs, role))
        deviations.append((abs(mass.value - 1.0), f"K={k}, d={d}, {snr_db} dB, {role}"))
    _worst("selected-hop mass", deviations, CLOSED_FORM_TOL)


@CheckRegistry.register("mrc_pdf_normalization", "PDF of the MRC output SNR")
def check_mrc_pdf_normalization() -> None:
    """The MRC output density integrates to one, including jittered geometries."""
    deviations = []
    for k, d, snr_db in product(RELAY_COUNTS, CLUSTER_POSITIONS, (0.0, 20.0, 40.0)):
        snrs = _snrs(d, snr_db)
        scale = max(snrs.gbar_sd, snrs.gbar_rd)
        mass = quad_semiinf(lambda x: pdf_beta(x, snrs, k), QUAD_TOL, scale=scale)
        deviations.append((abs(mass.value - 1.0), f"K={k}, d={d}, {snr_db} dB"))
    _worst("MRC mass", deviations, CLOSED_FORM_TOL)


@CheckRegistry.register("max_bottleneck_pdf_normalization", "PDF of the largest bottleneck SNR")
def check_max_bottleneck_pdf_normalization() -> None:
    """The largest-bottleneck density integrates to one."""
    deviations = []
    for k, gbar in product(RELAY_COUNTS, (0.5, 10.0, 1e4)):
        mass = quad_semiinf(lambda z: pdf_max_bottleneck(z, gbar, k), QUAD_TOL, scale=gbar)
        deviations.append((abs(mass.value - 1.0), f"K={k}, gbar={gbar:g}"))
    _worst("largest-bottleneck mass", deviations, CLOSED_FORM_TOL)


type Density = Callable[[float], float]


def _cdf_pdf_pairs(snrs: AvgSnrTriple, k: int) -> list[tuple[str, float, Density, Density]]:
    """(name, scale, CDF, PDF) of every SNR with a closed-form CDF."""
    pairs: list[tuple[str, float, Density, Density]] = [
        (
            "direct",
            snrs.gbar_sd,
            partial(cdf_gamma_sd, gbar_sd=snrs.gbar_sd),
            partial(pdf_gamma_sd, gbar_sd=snrs.gbar_sd),
        ),
        (
            "bottleneck",
            snrs.gbar,
            partial(cdf_max_bottleneck, gbar=snrs.gbar, k=k),
            partial(pdf_max_bottleneck, gbar=snrs.gbar, k=k),
        ),
    ]
    for role in ROLES:
        cdf = partial(cdf_selected_hop, snrs=snrs, k=k, role=role)
        pdf = partial(pdf_selected_hop, snrs=snrs, k=k, role=role)
        pairs.append((str(role), _hop_avg(snrs, role), cdf, pdf))
    return pairs


@CheckRegistry.register("cdf_derivative_matches_pdf", "CDF/PDF pairs of the direct, selected-hop and bottleneck SNRs")
def check_cdf_derivative_matches_pdf() -> None:
    """Central differences of each CDF reproduce its density.

    Densities are compared in units of the distribution's scale so the
    tolerance means the same thing at every SNR.
    """
    deviations = []
    for k, d, snr_db in product(RELAY_COUNTS, CLUSTER_POSITIONS, (0.0, 20.0)):
        snrs = _snrs(d, snr_db)
        for name, scale, cdf, pdf in _cdf_pdf_pairs(snrs, k):
            h = 1e-4 * scale
            for x in (0.1 * scale, 0.5 * scale, scale, 2.0 * scale):
                slope = (cdf(x + h) - cdf(x - h)) / (2.0 * h)
                deviations.append((abs(slope - pdf(x)) * scale, f"{name}, K={k}, d={d}, {snr_db} dB, x={x:g}"))
    _worst("CDF derivative", deviations, DERIVATIVE_TOL)


@CheckRegistry.register("selected_hop_mean_matches_quadrature", "mean of the selected second-hop SNR")
def check_selected_hop_mean_matches_quadrature() -> None:
    """The closed-form mean equals the first moment of the density."""
    deviations = []
    for k, d, snr_db, role in product(RELAY_COUNTS, CLUSTER_POSITIONS, (0.0, 20.0), ROLES):
        snrs = _snrs(d, snr_db)
        scale = _hop_avg(snrs, role)
        moment = quad_semiinf(lambda x: x * pdf_selected_hop(x, snrs, k, role), QUAD_TOL * scale, scale=scale)
        closed = mean_selected_hop(snrs, k, role)
        deviations.append((abs(closed - moment.value) / closed, f"K={k}, d={d}, {snr_db} dB, {role}"))
    _worst("relative mean", deviations, CLOSED_FORM_TOL)


@CheckRegistry.register("mrc_pdf_matches_convolution", "PDF of the MRC output SNR")
def check_mrc_pdf_matches_convolution() -> None:
    """The closed-form MRC density equals the convolution of the direct and second-hop densities."""
    deviations = []
    for k, d, snr_db in product(RELAY_COUNTS, (0.1, 0.3), (0.0, 10.0, 20.0)):
        snrs = _snrs(d, snr_db)
        mid = 0.5 * (snrs.gbar_sd + snrs.gbar_rd)
        for beta in (0.1 * mid, mid, 5.0 * mid):
            closed = pdf_beta(beta, snrs, k, SingularityPolicy.raise_error)
            numeric = conv_pdf_numeric(
                lambda x: pdf_gamma_sd(x, snrs.gbar_sd),
                lambda x: pdf_selected_hop(x, snrs, k),
                beta,
                QUAD_TOL,
            )
            deviations.append((abs(closed - numeric), f"K={k}, d={d}, {snr_db} dB, beta={beta:g}"))
    _worst("MRC density", deviations, DENSITY_TOL)


@CheckRegistry.register(
    "selected_hop_pdf_matches_conditional_integral",
    "selected-hop PDF against its conditional-bottleneck integral",
)
def check_selected_hop_pdf_matches_conditional_integral() -> None:
    """The closed-form selected-hop density equals its integral over the largest bottleneck."""
    deviations = []
    for k, d, snr_db, role in product(RELAY_COUNTS, CLUSTER_POSITIONS, (0.0, 10.0), ROLES):
        snrs = _snrs(d, snr_db)
        scale = _hop_avg(snrs, role)
        for x in (0.2 * scale, scale, 3.0 * scale):
            closed = pdf_selected_hop(x, snrs, k, role)
            numeric = selected_hop_pdf_numeric(x, snrs, k, role, QUAD_TOL)
            deviations.append((abs(closed - numeric), f"K={k}, d={d}, {snr_db} dB, {role}, x={x:g}"))
    _worst("selected-hop density", deviations, DENSITY_TOL)


@CheckRegistry.register("selected_hop_swap_symmetry", "first-hop PDF as the second-hop PDF with hops exchanged")
def check_selected_hop_swap_symmetry() -> None:
    """The first-hop density is the second-hop density with the hop averages exchanged."""
    x = np.linspace(0.0, 50.0, 101)
    for k, d, nu, snr_db, snrs in grid():
        first = pdf_selected_hop(x * snrs.gbar_sr, snrs, k, RelayHopRole.source_to_relay)
        mirrored = pdf_selected_hop(x * snrs.gbar_sr, snrs.swapped(), k, RelayHopRole.relay_to_destination)
        expect(np.array_equal(first, mirrored), f"hop exchange differs at K={k}, d={d}, nu={nu}, {snr_db} dB")


@CheckRegistry.register("max_bottleneck_forms_agree", "compact and binomial PDFs of the largest bottleneck")
def check_max_bottleneck_forms_agree() -> None:
    """Compact and expanded largest-bottleneck densities coincide."""
    for k, gbar in product(RELAY_COUNTS, (0.5, 10.0, 1e4)):
        z = gbar * np.array([0.05, 0.5, 1.0, 3.0, 10.0])
        compact = pdf_max_bottleneck(z, gbar, k)
        expanded = pdf_max_bottleneck_expanded(z, gbar, k)
        expect(
            bool(np.allclose(compact, expanded, rtol=1e-8, atol=1e-13 * k / gbar)),
            f"forms differ at K={k}, gbar={gbar:g}: {compact} vs {expanded}",
        )


# Closed-form identities


@CheckRegistry.register("l_of_alpha_matches_quadrature", "BPSK average of one exponential term, l(alpha)")
def check_l_of_alpha_matches_quadrature() -> None:
    """``l(alpha)`` equals the BPSK error average of ``e^(-alpha x)``."""
    deviations = []
    for alpha in (1e-3, 0.1, 1.0, 10.0, 1e3):
        numeric = bpsk_average(lambda x: math.exp(-alpha * x))
        deviations.append((abs(l_of_alpha(alpha) - numeric), f"alpha={alpha:g}"))
    _worst("l(alpha)", deviations, 1e-10)


@CheckRegistry.register("theta_matches_quadrature", "direct-branch-weighted average theta(a)")
def check_theta_matches_quadrature() -> None:
    """``theta(a)`` equals its defining integral against the direct-link weight."""
    deviations = []
    for a, gbar_sd in product((1e-3, 0.1, 1.0, 10.0), (0.5, 10.0, 1e4)):
        u = 1.0 + 1.0 / gbar_sd

        def integrand(t: float, a: float = a, u: float = u) -> float:
            return math.exp(-u * t * t) / SQRT_PI * -math.expm1(-a * t * t) / a

        numeric = quad_semiinf(integrand, QUAD_TOL, scale=1.0 / math.sqrt(u)).value
        deviations.append((abs(theta_of_a(a, gbar_sd) - numeric), f"a={a:g}, gbar_sd={gbar_sd:g}"))
    _worst("theta(a)", deviations, 1e-10)


# Hop and combiner error probabilities


type HopError = Callable[[AvgSnrTriple, int], float]


def _against_quadrature(label: str, closed: HopError, numeric: HopError) -> None:
    deviations = []
    for k, d, nu, snr_db, snrs in grid():
        deviations.append((abs(closed(snrs, k) - numeric(snrs, k)), f"K={k}, d={d}, nu={nu}, {snr_db} dB"))
    _worst(label, deviations, CLOSED_FORM_TOL)


@CheckRegistry.register("p_sr_star_matches_quadrature", "P_sr*: BER of the source to selected-relay hop")
def check_p_sr_star_matches_quadrature() -> None:
    """The first-hop error probability equals the BPSK average of the first-hop density."""
    _against_quadrature(
        "P_sr*",
        p_sr_star,
        lambda snrs, k: bpsk_average(lambda x: pdf_selected_hop(x, snrs, k, RelayHopRole.source_to_relay)),
    )


@CheckRegistry.register("p_rstar_d_matches_quadrature", "P_r*d: BER of the selected-relay to destination hop")
def check_p_rstar_d_matches_quadrature() -> None:
    """The second-hop error probability equals the BPSK average of the second-hop density."""
    _against_quadrature(
        "P_r*d",
        p_rstar_d,
        lambda snrs, k: bpsk_average(lambda x: pdf_selected_hop(x, snrs, k, RelayHopRole.relay_to_destination)),
    )


@CheckRegistry.register("p_mrc_matches_quadrature", "P_mrc: BER of the MRC detector")
def check_p_mrc_matches_quadrature() -> None:
    """The MRC error probability equals the BPSK average of the MRC output density."""
    _against_quadrature("P_mrc", p_mrc, lambda snrs, k: bpsk_average(lambda x: pdf_beta(x, snrs, k)))


@CheckRegistry.register("p_dsc_matches_quadrature", "P_DSC: BER of the selection-combining detector, I1 - I2")
def check_p_dsc_matches_quadrature() -> None:
    """The selection-combining error probability equals its CDF-form integral."""
    _against_quadrature("P_DSC", p_dsc, lambda snrs, k: bpsk_average_by_cdf(lambda x: cdf_dsc(x, snrs, k)))


@CheckRegistry.register("singular_parameters_jitter", "P_mrc at a removable pole")
def check_singular_parameters_jitter() -> None:
    """A coincident pole raises under the strict policy and is jittered to a continuous value otherwise."""
    snrs = _snrs(0.5, 20.0)
    try:
        p_mrc(snrs, 2, SingularityPolicy.raise_error)
    except NearSingularParametersError:
        pass
    else:
        raise CheckFailure("strict policy accepted the pole 2 * gbar_sd = gbar at d=0.5, nu=2")
    at_pole = p_mrc(snrs, 2)
    nearby = p_mrc(snrs.with_direct(snrs.gbar_sd * (1.0 + 1e-4)), 2, SingularityPolicy.raise_error)
    expect(
        math.isclose(at_pole, nearby, rel_tol=1e-3),
        f"jittered P_mrc {at_pole:.6e} is not continuous with {nearby:.6e}",
    )


# End-to-end BER


@CheckRegistry.register("ber_composition_law", "P_e = P_prop P_sr* + (1 - P_sr*) P_combiner")
def check_ber_composition_law() -> None:
    """Every end-to-end BER recomposes from its intermediate probabilities; SR propagates every relay error."""
    for scheme in SchemeKind:
        for k, d, nu, snr_db, snrs in grid():
            breakdown = ber_end_to_end(scheme, snrs, k)
            where = f"{scheme}, K={k}, d={d}, nu={nu}, {snr_db} dB"
            expect(
                math.isclose(breakdown.recompose(), breakdown.p_end_to_end, rel_tol=1e-12, abs_tol=1e-300),
                f"composition broken at {where}",
            )
            if scheme == SchemeKind.sr:
                expect(breakdown.p_prop == 1.0, f"SR propagation probability {breakdown.p_prop} at {where}")


@CheckRegistry.register("ber_nonincreasing_in_snr", "end-to-end BER of FSCR, DSC and SR")
def check_ber_nonincreasing_in_snr() -> None:
    """End-to-end BER never grows with Es/N0."""
    for scheme, k, d, nu in product(SchemeKind, RELAY_COUNTS, CLUSTER_POSITIONS, PATH_LOSS_EXPONENTS):
        curve = [ber_end_to_end(scheme, _snrs(d, snr_db, nu), k).p_end_to_end for snr_db in range(0, 42, 2)]
        for step, (before, after) in enumerate(zip(curve, curve[1:], strict=False)):
            expect(
                after <= before * (1.0 + 1e-12),
                f"{scheme} BER rises from {before:.6e} to {after:.6e} at {2 * step + 2} dB (K={k}, d={d}, nu={nu})",
            )


@CheckRegistry.register("asymptote_convergence", "high-SNR asymptotes of FSCR, DSC and SR")
def check_asymptote_convergence() -> None:
    """The asymptote-to-exact log ratio shrinks strictly from 20 to 40 dB."""
    for scheme, k, d, nu in product(SchemeKind, RELAY_COUNTS, CLUSTER_POSITIONS, PATH_LOSS_EXPONENTS):
        gaps = []
        for snr_db in (20.0, 30.0, 40.0):
            snrs = _snrs(d, snr_db, nu)
            exact = ber_end_to_end(scheme, snrs, k).p_end_to_end
            gaps.append(abs(math.log10(ber_asymptotic(scheme, snrs, k) / exact)))
        expect(
            gaps[0] > gaps[1] > gaps[2],
            f"{scheme} asymptote does not converge at K={k}, d={d}, nu={nu}: log10 gaps {gaps}",
        )


def _slope(scheme: SchemeKind, k: int, d: float, snr_db: range) -> float:
    return slope_fit([(s, ber_end_to_end(scheme, _snrs(d, s), k).p_end_to_end) for s in snr_db])


@CheckRegistry.register("sr_slope_full_diversity", "diversity order of SR")
def check_sr_slope_full_diversity() -> None:
    """SR at mid distance reaches diversity K over 30-40 dB."""
    for k in RELAY_COUNTS:
        slope = _slope(SchemeKind.sr, k, 0.5, range(30, 42, 2))
        expect(abs(slope - k) <= 0.15, f"SR slope {slope:.3f} at K={k}, d=0.5, expected {k} +/- 0.15")


@CheckRegistry.register("fscr_dsc_slope_mid_distance", "diversity order of FSCR and DSC at mid distance")
def check_fscr_dsc_slope_mid_distance() -> None:
    """FSCR and DSC at mid distance show diversity K over 30-40 dB."""
    for scheme, k in product((SchemeKind.fscr, SchemeKind.dsc), RELAY_COUNTS):
        slope = _slope(scheme, k, 0.5, range(30, 42, 2))
        expect(abs(slope - k) <= 0.3, f"{scheme} slope {slope:.3f} at K={k}, d=0.5, expected {k} +/- 0.3")


@CheckRegistry.register("fscr_dsc_slope_recovered_near_source", "diversity order of FSCR and DSC near the source")
def check_fscr_dsc_slope_recovered_near_source() -> None:
    """With the cluster near the source, FSCR and DSC fall at least half an order faster than K over 10-25 dB.

    FSCR with four relays is still in the transition to order K + 1 over that range and only has to beat K.
    Every case also has to fall faster than at d=0.5.
    """
    for scheme, k in product((SchemeKind.fscr, SchemeKind.dsc), (2, 4)):
        near = _slope(scheme, k, 0.1, range(10, 26))
        mid = _slope(scheme, k, 0.5, range(10, 26))
        if scheme == SchemeKind.fscr and k == 4:
            expect(near > k, f"{scheme} slope {near:.3f} at K={k}, d=0.1 does not exceed {k}")
        else:
            expect(near >= k + 0.5, f"{scheme} slope {near:.3f} at K={k}, d=0.1 below {k + 0.5}")
        expect(near > mid, f"{scheme} slope {near:.3f} at d=0.1 not above {mid:.3f} at d=0.5 (K={k})")


@CheckRegistry.register("dsc_not_better_than_fscr", "end-to-end BER of DSC against FSCR")
def check_dsc_not_better_than_fscr() -> None:
    """Selection combining never beats MRC of the same branches."""
    for k, d, nu, snr_db, snrs in grid():
        fscr, dsc = ber_fscr(snrs, k).p_end_to_end, ber_dsc(snrs, k).p_end_to_end
        expect(dsc >= fscr * (1.0 - 1e-9), f"DSC {dsc:.6e} below FSCR {fscr:.6e} at K={k}, d={d}, nu={nu}, {snr_db} dB")


@CheckRegistry.register("fscr_dsc_gap_shrinks", "Es/N0 gap between DSC and FSCR at BER 1e-3")
def check_fscr_dsc_gap_shrinks() -> None:
    """The DSC penalty at BER 1e-3 is smaller with the cluster at mid distance than near the source."""
    for k in (2, 4):
        gaps = {}
        for d in CLUSTER_POSITIONS:
            geometry = NetworkGeometry(d=d, nu=2.0)
            gaps[d] = snr_at_ber(SchemeKind.dsc, 1e-3, k, geometry) - snr_at_ber(SchemeKind.fscr, 1e-3, k, geometry)
        expect(gaps[0.1] > gaps[0.5] >= 0.0, f"gap does not shrink at K={k}: {gaps}")


# Sampling


def _ks_threshold() -> float:
    return ks_critical_value(KS_SAMPLES, KS_FAMILY_ALPHA / KS_TESTS)


@CheckRegistry.register("selected_hop_sampling_ks", "CDF of the selected second-hop SNR")
def check_selected_hop_sampling_ks() -> None:
    """Simulated second-hop SNRs of the max-min relay follow the closed-form CDF."""
    variances = link_variances(NetworkGeometry(d=0.3, nu=2.0))
    snrs = avg_snrs_from_geometry(NetworkGeometry(d=0.3, nu=2.0), 10.0)
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(20240611)))
    for k in RELAY_COUNTS:
        samples = sample_selected_hop_snr(rng, variances, k, size=KS_SAMPLES, snr_db=10.0)
        statistic = ks_statistic(samples, lambda x, k=k: cdf_selected_hop(x, snrs, k))
        expect(statistic <= _ks_threshold(), f"KS distance {statistic:.3e} at K={k}")


@CheckRegistry.register("max_bottleneck_sampling_ks", "CDF of the largest bottleneck SNR")
def check_max_bottleneck_sampling_ks() -> None:
    """Simulated largest bottlenecks follow the closed-form CDF."""
    variances = link_variances(NetworkGeometry(d=0.3, nu=2.0))
    snrs = avg_snrs_from_geometry(NetworkGeometry(d=0.3, nu=2.0), 10.0)
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(20240612)))
    for k in RELAY_COUNTS:
        samples = sample_max_bottleneck(rng, variances, k, size=KS_SAMPLES, snr_db=10.0)
        statistic = ks_statistic(samples, lambda z, k=k: cdf_max_bottleneck(z, snrs.gbar, k))
        expect(statistic <= _ks_threshold(), f"KS distance {statistic:.3e} at K={k}")


# Simulation

SIM_RELAY_COUNTS = (2, 4)
SIM_SNR_DB = (0.0, 5.0, 10.0, 15.0, 20.0)
SIM_MIN_ERRORS = 200
SIM_TRIAL_CAP = 40_000_000
# points with a lower closed-form BER are skipped
SIM_BER_FLOOR = 1e-5


def _simulated(
    scheme: SchemeKind,
    k: int,
    d: float,
    snr_db: float,
    trials: int,
    seed: int,
    min_errors: int = 0,
) -> SimConfig:
    return SimConfig(
        scheme=scheme,
        k=k,
        geometry=NetworkGeometry(d=d, nu=2.0),
        snr_db=snr_db,
        trials=trials,
        seed=seed,
        min_errors=min_errors,
    )


def _compare_ber(scheme: SchemeKind, k: int, d: float, snr_db: float, rel_tol: float) -> bool:
    """Compare one simulated point with the closed form; False when the point lies below the BER floor."""
    analytic = ber_end_to_end(scheme, _snrs(d, snr_db), k).p_end_to_end
    if analytic < SIM_BER_FLOOR:
        return False
    seed = 1000 * k + int(snr_db) + 7
    estimate = run_trials(_simulated(scheme, k, d, snr_db, SIM_TRIAL_CAP, seed, SIM_MIN_ERRORS))
    expect(
        estimate.errors >= SIM_MIN_ERRORS,
        f"{scheme} at K={k}, d={d}, {snr_db} dB: only {estimate.errors} errors in {estimate.trials} symbols",
    )
    band = max(rel_tol * analytic, 3.0 * estimate.ci_half_width)
    expect(
        abs(estimate.ber - analytic) <= band,
        f"{scheme} simulated {estimate.ber:.4e} vs analytic {analytic:.4e} at K={k}, d={d}, {snr_db} dB "
        f"(band {band:.2e}, {estimate.errors} errors)",
    )
    return True


def _compare_near_source(schemes: tuple[SchemeKind, ...], rel_tol: float) -> None:
    compared = [
        _compare_ber(scheme, k, 0.1, snr_db, rel_tol)
        for scheme, k, snr_db in product(schemes, SIM_RELAY_COUNTS, SIM_SNR_DB)
    ]
    expect(any(compared), f"no simulated point of {[str(s) for s in schemes]} lies above BER {SIM_BER_FLOOR:g}")


@CheckRegistry.register("simulated_sr_matches_analytic", "end-to-end BER of SR against simulation")
def check_simulated_sr_matches_analytic() -> None:
    """SR simulation near the source agrees with the closed form within 5% or three half-widths."""
    _compare_near_source((SchemeKind.sr,), 0.05)


@CheckRegistry.register("simulated_fscr_dsc_match_analytic", "end-to-end BER of FSCR and DSC against simulation")
def check_simulated_fscr_dsc_match_analytic() -> None:
    """FSCR and DSC simulations near the source agree with the closed forms within 15% or three half-widths."""
    _compare_near_source((SchemeKind.fscr, SchemeKind.dsc), 0.15)


@CheckRegistry.register("simulated_relay_error_rate_matches_p_sr_star", "P_sr* against simulated relay decisions")
def check_simulated_relay_error_rate_matches_p_sr_star() -> None:
    """The simulated relay decision error rate matches the first-hop error probability."""
    for snr_db in (0.0, 5.0):
        estimate = run_trials(_simulated(SchemeKind.sr, 2, 0.5, snr_db, 200_000, seed=31 + int(snr_db)))
        low, high = wilson_interval(estimate.prop_events, estimate.trials)
        analytic = p_sr_star(_snrs(0.5, snr_db), 2)
        band = max(0.05 * analytic, 1.5 * (high - low))
        expect(
            abs(estimate.relay_error_rate - analytic) <= band,
            f"relay error rate {estimate.relay_error_rate:.4e} vs P_sr* {analytic:.4e} at {snr_db} dB",
        )


@CheckRegistry.register("simulation_deterministic", "simulator reproducibility")
def check_simulation_deterministic() -> None:
    """One seed gives one estimate."""
    config = _simulated(SchemeKind.fscr, 4, 0.5, 6.0, 100_000, seed=99)
    first, second = run_trials(config), run_trials(config)
    expect(first == second, f"repeat runs differ: {first} vs {second}")


@CheckRegistry.register("simulation_noiseless_error_free", "simulator in the noiseless limit")
def check_simulation_noiseless_error_free() -> None:
    """Without receiver noise no relay or destination decision is wrong."""
    for scheme in SchemeKind:
        config = _simulated(scheme, 2, 0.3, 0.0, 50_000, seed=5).model_copy(
            update={"noiseless": True}
        )
        estimate = run_trials(config)
        expect(
            estimate.errors == 0 and estimate.prop_events == 0,
            f"{scheme} noiseless run made {estimate.errors} errors and {estimate.prop_events} relay errors",
        )
