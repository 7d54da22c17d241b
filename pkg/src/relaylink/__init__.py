"""Relaylink - exact and simulated BER of opportunistic decode-and-forward relaying."""

# Core
from relaylink.core import (
    AvgSnrTriple,
    ConfigFileError,
    InvalidParameterError,
    LinkVariances,
    NearSingularParametersError,
    NetworkGeometry,
    NonConvergenceError,
    RelaylinkException,
    SchemeKind,
    ValidationFailedError,
    avg_snrs_from_geometry,
    db_to_linear,
    link_variances,
)

# Analytic feature
from relaylink.modules.analytic import (
    BerBreakdown,
    ber_asymptotic,
    ber_dsc,
    ber_end_to_end,
    ber_fscr,
    ber_sr,
    snr_at_ber,
)

# Simlink feature
from relaylink.modules.simlink import BerEstimate, SimConfig, run_trials

# Stats feature
from relaylink.modules.stats import RelayHopRole, SingularityPolicy

__all__ = [
    # Core
    "AvgSnrTriple",
    "LinkVariances",
    "NetworkGeometry",
    "SchemeKind",
    "avg_snrs_from_geometry",
    "link_variances",
    "db_to_linear",
    # Errors
    "RelaylinkException",
    "InvalidParameterError",
    "NearSingularParametersError",
    "NonConvergenceError",
    "ConfigFileError",
    "ValidationFailedError",
    # Stats feature
    "RelayHopRole",
    "SingularityPolicy",
    # Analytic feature
    "BerBreakdown",
    "ber_fscr",
    "ber_dsc",
    "ber_sr",
    "ber_end_to_end",
    "ber_asymptotic",
    "snr_at_ber",
    # Simlink feature
    "SimConfig",
    "BerEstimate",
    "run_trials",
]
