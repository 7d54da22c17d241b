"""Tests for the high-SNR BER asymptotes."""

import math

import pytest

from relaylink.core import InvalidParameterError, NetworkGeometry, SchemeKind, avg_snrs_from_geometry
from relaylink.modules.analytic import asymp_dsc, asymp_fscr, asymp_sr, ber_asymptotic, ber_end_to_end


@pytest.mark.parametrize("k", [1, 2, 3])
def test_sr_asymptote_closed_form(k: int) -> None:
    """SR decays as Gamma(K + 1/2) / (2 sqrt(pi)) gbar^-K: 1/(4 gbar) for K = 1, 3/(8 gbar^2) for K = 2."""
    snrs = avg_snrs_from_geometry(NetworkGeometry(d=0.3, nu=2.0), 30.0)
    leading = {1: 1.0 / 4.0, 2: 3.0 / 8.0, 3: 15.0 / 16.0}[k]
    assert asymp_sr(snrs, k) == pytest.approx(leading * snrs.gbar**-k, rel=1e-12)


def test_mrc_asymptote_below_selection_combining() -> None:
    """The MRC combiner term is the SC term divided by K + 1."""
    snrs = avg_snrs_from_geometry(NetworkGeometry(d=0.5, nu=2.0), 40.0)
    assert asymp_fscr(snrs, 2) < asymp_dsc(snrs, 2)


@pytest.mark.parametrize("scheme", list(SchemeKind))
@pytest.mark.parametrize("k", [1, 2, 4])
def test_asymptote_ratio_tends_to_one(scheme: SchemeKind, k: int) -> None:
    """Exact and asymptotic BER agree ever more closely as Es/N0 grows."""
    geometry = NetworkGeometry(d=0.3, nu=2.0)
    gaps = []
    for snr_db in (20.0, 35.0, 50.0):
        snrs = avg_snrs_from_geometry(geometry, snr_db)
        exact = ber_end_to_end(scheme, snrs, k).p_end_to_end
        gaps.append(abs(math.log10(ber_asymptotic(scheme, snrs, k) / exact)))
    assert gaps[2] < gaps[0]
    assert gaps[2] < math.log10(1.02)


def test_asymptote_within_factor_two_at_forty_db() -> None:
    """At 40 dB the asymptote is already within a factor of two."""
    snrs = avg_snrs_from_geometry(NetworkGeometry(d=0.5, nu=2.0), 40.0)
    for scheme in SchemeKind:
        ratio = ber_asymptotic(scheme, snrs, 2) / ber_end_to_end(scheme, snrs, 2).p_end_to_end
        assert 0.5 < ratio < 2.0


def test_asymptote_rejects_bad_relay_count() -> None:
    """K outside [1, 20] is a usage error."""
    snrs = avg_snrs_from_geometry(NetworkGeometry(d=0.5, nu=2.0), 10.0)
    with pytest.raises(InvalidParameterError):
        asymp_fscr(snrs, 0)
