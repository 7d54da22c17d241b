"""Analytic feature - closed-form end-to-end BER chains and their high-SNR asymptotes."""

from .asymptotic import asymp_dsc, asymp_fscr, asymp_sr, ber_asymptotic
from .ber import (
    ber_dsc,
    ber_end_to_end,
    ber_fscr,
    ber_sr,
    i2_term,
    p_dsc,
    p_mrc,
    p_prop,
    p_rstar_d,
    p_sr_star,
    snr_at_ber,
    working_precision,
)
from .identities import l_of_alpha, theta_of_a
from .schemas import BerBreakdown

__all__ = [
    # Schemas
    "BerBreakdown",
    # Identities
    "l_of_alpha",
    "theta_of_a",
    # Hop and combiner probabilities
    "p_prop",
    "p_sr_star",
    "p_rstar_d",
    "p_mrc",
    "i2_term",
    "p_dsc",
    "working_precision",
    # End-to-end BER
    "ber_fscr",
    "ber_dsc",
    "ber_sr",
    "ber_end_to_end",
    "snr_at_ber",
    # Asymptotes
    "asymp_fscr",
    "asymp_dsc",
    "asymp_sr",
    "ber_asymptotic",
]
