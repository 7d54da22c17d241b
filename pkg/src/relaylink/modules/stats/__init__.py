"""Stats feature - exact and asymptotic distributions of the relaying SNRs."""

from .asymptotic import approx_cdf_rstar_d, approx_cdf_sd, approx_pdf_beta, approx_pdf_srstar
from .distributions import (
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
from .schemas import RelayHopRole, SingularityPolicy
from .series import alternating_binomial, compensated_sum
from .singularity import resolve_singularity, singular_collisions

__all__ = [
    # Schemas
    "RelayHopRole",
    "SingularityPolicy",
    # Exact distributions
    "pdf_gamma_sd",
    "cdf_gamma_sd",
    "pdf_selected_hop",
    "cdf_selected_hop",
    "mean_selected_hop",
    "pdf_beta",
    "cdf_dsc",
    "pdf_max_bottleneck",
    "pdf_max_bottleneck_expanded",
    "cdf_max_bottleneck",
    # Asymptotic forms
    "approx_pdf_srstar",
    "approx_pdf_beta",
    "approx_cdf_sd",
    "approx_cdf_rstar_d",
    # Numerics
    "alternating_binomial",
    "compensated_sum",
    "singular_collisions",
    "resolve_singularity",
]
