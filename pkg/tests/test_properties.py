"""Property-based tests of the exact distributions and error probabilities."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relaylink.core import AvgSnrTriple, SchemeKind
from relaylink.modules.analytic import ber_end_to_end, p_rstar_d, p_sr_star
from relaylink.modules.stats import RelayHopRole, cdf_selected_hop, pdf_selected_hop

averages = st.floats(min_value=0.5, max_value=200.0, allow_nan=False, allow_infinity=False)
relay_counts = st.integers(min_value=1, max_value=5)
points = st.floats(min_value=0.0, max_value=100.0, allow_nan=False)


@st.composite
def snr_triples(draw: st.DrawFn) -> AvgSnrTriple:
    return AvgSnrTriple(gbar_sd=draw(averages), gbar_sr=draw(averages), gbar_rd=draw(averages))


@settings(max_examples=60, deadline=None)
@given(snrs=snr_triples(), k=relay_counts, x=points)
def test_first_hop_is_second_hop_of_swapped_network(snrs: AvgSnrTriple, k: int, x: float) -> None:
    """Exchanging the hop averages exchanges the roles."""
    first = pdf_selected_hop(x, snrs, k, RelayHopRole.source_to_relay)
    assert first == pytest.approx(pdf_selected_hop(x, snrs.swapped(), k, RelayHopRole.relay_to_destination))


@settings(max_examples=60, deadline=None)
@given(snrs=snr_triples(), k=relay_counts, x=points, factor=st.floats(min_value=0.1, max_value=10.0))
def test_density_scales_with_the_averages(snrs: AvgSnrTriple, k: int, x: float, factor: float) -> None:
    """Scaling every average scales the variable: f(c x; c gbar) = f(x; gbar) / c."""
    base = pdf_selected_hop(x, snrs, k)
    scaled = factor * pdf_selected_hop(factor * x, snrs.scaled(factor), k)
    assert scaled == pytest.approx(base, rel=1e-6, abs=1e-9 / snrs.gbar)


@settings(max_examples=40, deadline=None)
@given(snrs=snr_triples(), k=relay_counts, role=st.sampled_from(list(RelayHopRole)))
def test_cdf_is_a_distribution_function(snrs: AvgSnrTriple, k: int, role: RelayHopRole) -> None:
    """The CDF starts at 0, stays in [0, 1] and never decreases."""
    grid = np.linspace(0.0, 20.0 * max(snrs.gbar_sr, snrs.gbar_rd), 200)
    values = cdf_selected_hop(grid, snrs, k, role)
    assert values[0] == pytest.approx(0.0, abs=1e-12)
    assert np.all((values >= 0.0) & (values <= 1.0))
    assert np.all(np.diff(values) >= -1e-12)


@settings(max_examples=30, deadline=None)
@given(snrs=snr_triples(), k=relay_counts, scheme=st.sampled_from(list(SchemeKind)))
def test_error_probabilities_are_below_one_half(snrs: AvgSnrTriple, k: int, scheme: SchemeKind) -> None:
    """Hop and end-to-end BERs are probabilities no worse than guessing."""
    assert 0.0 < p_sr_star(snrs, k) < 0.5
    assert 0.0 < p_rstar_d(snrs, k) < 0.5
    breakdown = ber_end_to_end(scheme, snrs, k)
    assert 0.0 < breakdown.p_end_to_end < 0.5
    assert breakdown.p_end_to_end == pytest.approx(breakdown.recompose())
