"""Linear network geometry and the mapping from path loss to average SNRs."""

from __future__ import annotations

from .schemas import AvgSnrTriple, LinkVariances, NetworkGeometry


def link_variances(geometry: NetworkGeometry) -> LinkVariances:
    """Path-loss channel variances with distances normalized by the source-destination distance."""
    return LinkVariances(
        sd=1.0,
        sr=geometry.d ** (-geometry.nu),
        rd=(1.0 - geometry.d) ** (-geometry.nu),
    )


def avg_snrs_from_variances(variances: LinkVariances, snr_db: float) -> AvgSnrTriple:
    """Scale channel variances by Es/N0 to get average SNRs."""
    return variances.avg_snrs(snr_db)


def avg_snrs_from_geometry(geometry: NetworkGeometry, snr_db: float) -> AvgSnrTriple:
    """Average SNRs of the linear network at a given Es/N0 in decibels."""
    return avg_snrs_from_variances(link_variances(geometry), snr_db)
