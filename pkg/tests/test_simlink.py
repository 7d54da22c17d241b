"""Tests for channel draws, relay selection and the Monte Carlo simulator."""

import numpy as np
import pytest
from pydantic import ValidationError

from relaylink.core import LinkVariances, NetworkGeometry, SchemeKind, link_variances
from relaylink.core.snr import db_to_linear
from relaylink.modules.analytic import ber_sr
from relaylink.modules.simlink import (
    ChannelBatch,
    ChannelDraw,
    InstantSnrs,
    SimConfig,
    awgn,
    complex_gaussian,
    draw_channel_batch,
    draw_channels,
    run_trials,
    sample_max_bottleneck,
    sample_selected_hop_snr,
    select_relay,
    select_relays,
    simulate_batch,
    simulate_symbol,
    wilson_interval,
)
from relaylink.modules.simlink.channel import SAMPLE_BLOCK
from relaylink.modules.stats import RelayHopRole, mean_selected_hop


def _philox(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))


class TestChannels:
    """Test channel draws and max-min selection."""

    def test_complex_gaussian_power(self, rng: np.random.Generator) -> None:
        """E|h|^2 equals the requested variance."""
        h = complex_gaussian(rng, 4.0, 200_000)
        assert np.mean(np.abs(h) ** 2) == pytest.approx(4.0, rel=0.02)
        assert abs(np.mean(h)) < 0.05

    def test_batch_shapes(self, rng: np.random.Generator) -> None:
        """The direct link is a vector and the relay hops are (n, K) matrices."""
        batch = draw_channel_batch(rng, link_variances(NetworkGeometry(d=0.3, nu=2.0)), 3, 10)
        assert batch.size == 10
        assert batch.h_sd.shape == (10,)
        assert batch.h_sr.shape == batch.h_rd.shape == (10, 3)

    def test_single_draw(self, rng: np.random.Generator) -> None:
        """One realization carries one gain pair per relay."""
        draw = draw_channels(rng, LinkVariances(sd=1.0, sr=2.0, rd=3.0), 4)
        assert len(draw.h_sr) == len(draw.h_rd) == 4
        assert ChannelBatch.from_draw(draw).draw(0) == draw

    def test_draw_rejects_mismatched_relays(self) -> None:
        """Both hops need one gain per relay."""
        with pytest.raises(ValidationError):
            ChannelDraw(h_sd=1.0, h_sr=(1.0, 1.0), h_rd=(1.0,))

    def test_select_relays_lowest_index_on_ties(self) -> None:
        """Row-wise argmax of the bottleneck, ties to the lowest index."""
        gamma_sr = np.array([[1.0, 5.0], [3.0, 2.0], [0.5, 8.0]])
        gamma_rd = np.array([[4.0, 1.0], [3.0, 9.0], [9.0, 2.0]])
        np.testing.assert_array_equal(select_relays(gamma_sr, gamma_rd), [0, 0, 1])

    @pytest.mark.parametrize("k", [1, 2, 4, 7])
    def test_select_relays_matches_per_draw_selection(self, rng: np.random.Generator, k: int) -> None:
        """Vectorised selection picks the same relay as the max-min rule applied draw by draw."""
        es_over_n0 = db_to_linear(10.0)
        batch = draw_channel_batch(rng, link_variances(NetworkGeometry(d=0.3, nu=2.0)), k, 2000)
        chosen = select_relays(es_over_n0 * np.abs(batch.h_sr) ** 2, es_over_n0 * np.abs(batch.h_rd) ** 2)
        expected = [InstantSnrs.from_draw(batch.draw(i), es_over_n0).selected for i in range(batch.size)]
        np.testing.assert_array_equal(chosen, expected)

    def test_instant_snrs(self) -> None:
        """Selection and combiner outputs of one realization."""
        draw = ChannelDraw(h_sd=1.0, h_sr=(1.0, 2.0, 2.0), h_rd=(3.0, 1.5, 1.5))
        snrs = InstantSnrs.from_draw(draw, 2.0)
        assert snrs.bottlenecks == (2.0, 4.5, 4.5)
        assert select_relay(snrs) == 1
        assert snrs.gamma_srstar == 8.0
        assert snrs.gamma_rstar_d == 4.5
        assert snrs.beta == 6.5
        assert snrs.gamma_dsc == 4.5


class TestSamplers:
    """Test the SNR samplers used by the goodness-of-fit checks."""

    @pytest.mark.parametrize("role", list(RelayHopRole))
    def test_selected_hop_mean(self, role: RelayHopRole) -> None:
        """The sample mean of the selected hop matches its closed-form mean."""
        variances = link_variances(NetworkGeometry(d=0.3, nu=2.0))
        samples = sample_selected_hop_snr(_philox(7), variances, 3, role, size=200_000, snr_db=10.0)
        assert samples.shape == (200_000,)
        assert np.all(samples >= 0.0)
        assert samples.mean() == pytest.approx(mean_selected_hop(variances.avg_snrs(10.0), 3, role), rel=0.02)

    def test_bottleneck_below_selected_hop(self) -> None:
        """With the same draws the largest bottleneck never exceeds the selected hop, across block boundaries."""
        variances = link_variances(NetworkGeometry(d=0.5, nu=2.0))
        size = SAMPLE_BLOCK + 17
        bottleneck = sample_max_bottleneck(_philox(3), variances, 2, size=size)
        second_hop = sample_selected_hop_snr(_philox(3), variances, 2, size=size)
        assert bottleneck.shape == second_hop.shape == (size,)
        assert np.all(bottleneck <= second_hop)


class TestSimulator:
    """Test symbol transmission and the trial loop."""

    @pytest.mark.parametrize("scheme", list(SchemeKind))
    def test_noiseless_is_error_free(self, scheme: SchemeKind, rng: np.random.Generator) -> None:
        """Without noise neither the relay nor the destination errs."""
        batch = draw_channel_batch(rng, LinkVariances(sd=1.0, sr=1.0, rd=1.0), 3, 1000)
        errors, relay_errors = simulate_batch(rng, scheme, batch, 1.0, noiseless=True)
        assert not errors.any()
        assert not relay_errors.any()

    @pytest.mark.parametrize("snr_db", [0.0, 10.0, 20.0])
    def test_matched_filter_snr_is_calibrated(self, rng: np.random.Generator, snr_db: float) -> None:
        """Over a fixed gain the matched-filter output SNR equals Es |h|^2 / N0 within 1%."""
        n = 1_000_000
        es_over_n0 = db_to_linear(snr_db)
        h = 0.8 - 0.6j
        symbols = 1.0 - 2.0 * rng.integers(0, 2, size=n)
        y = np.sqrt(es_over_n0) * h * symbols + awgn(rng, n)
        # project onto the gain direction and strip the symbol
        z = np.real(np.conj(h) * y) / abs(h) * symbols
        measured = z.mean() ** 2 / (2.0 * z.var())
        assert measured == pytest.approx(es_over_n0 * abs(h) ** 2, rel=0.01)

    def test_simulate_symbol(self, rng: np.random.Generator) -> None:
        """A single symbol yields two plain booleans."""
        config = SimConfig(scheme=SchemeKind.dsc, k=2, geometry=NetworkGeometry(d=0.5, nu=2.0), snr_db=10.0, trials=1)
        draw = draw_channels(rng, config.link_variances(), 2)
        bit_error, relay_error = simulate_symbol(rng, config, draw)
        assert isinstance(bit_error, bool)
        assert isinstance(relay_error, bool)

    def test_run_trials_deterministic(self) -> None:
        """Equal configurations give equal estimates; another seed gives another estimate."""
        config = SimConfig(
            scheme=SchemeKind.fscr,
            k=2,
            geometry=NetworkGeometry(d=0.5, nu=2.0),
            snr_db=5.0,
            trials=20_000,
            seed=11,
            chunk_size=4096,
        )
        first = run_trials(config)
        assert run_trials(config) == first
        assert run_trials(config.model_copy(update={"seed": 12})) != first

    def test_run_trials_stops_early(self) -> None:
        """Early stopping needs the error count and a tenth of the requested trials."""
        config = SimConfig(
            scheme=SchemeKind.sr,
            k=1,
            geometry=NetworkGeometry(d=0.5, nu=2.0),
            snr_db=0.0,
            trials=200_000,
            min_errors=50,
            chunk_size=1000,
        )
        estimate = run_trials(config)
        assert estimate.stopped_early is True
        assert estimate.trials == 20_000
        assert estimate.errors >= 50

    def test_run_trials_without_early_stop(self) -> None:
        """min_errors = 0 runs every trial."""
        config = SimConfig(
            scheme=SchemeKind.sr,
            k=1,
            geometry=NetworkGeometry(d=0.5, nu=2.0),
            snr_db=0.0,
            trials=5000,
            min_errors=0,
            chunk_size=1000,
        )
        estimate = run_trials(config)
        assert estimate.stopped_early is False
        assert estimate.trials == 5000
        assert estimate.ci95_low <= estimate.ber <= estimate.ci95_high

    def test_simulated_sr_matches_closed_form(self) -> None:
        """200k SR symbols land within 10% of the closed form at 10 dB."""
        geometry = NetworkGeometry(d=0.5, nu=2.0)
        config = SimConfig(scheme=SchemeKind.sr, k=1, geometry=geometry, snr_db=10.0, trials=200_000, min_errors=0)
        estimate = run_trials(config)
        expected = ber_sr(config.link_variances().avg_snrs(10.0), 1).p_end_to_end
        assert estimate.ber == pytest.approx(expected, rel=0.1)
        assert estimate.relay_error_rate > 0.0


class TestWilsonInterval:
    """Test the binomial confidence interval."""

    def test_zero_errors(self) -> None:
        """With no errors the upper bound is z^2 / (n + z^2)."""
        low, high = wilson_interval(0, 100)
        assert low == pytest.approx(0.0, abs=1e-12)
        assert high == pytest.approx(1.959964**2 / (100 + 1.959964**2), rel=1e-4)

    def test_symmetric_at_half(self) -> None:
        """The interval is centred at one half for 50 of 100."""
        low, high = wilson_interval(50, 100)
        assert low + high == pytest.approx(1.0)
        assert low < 0.5 < high


class TestSimConfig:
    """Test run configuration validation."""

    def test_exactly_one_network(self) -> None:
        """Geometry and variances are mutually exclusive and one is required."""
        geometry = NetworkGeometry(d=0.5, nu=2.0)
        variances = LinkVariances(sd=1.0, sr=1.0, rd=1.0)
        with pytest.raises(ValidationError):
            SimConfig(scheme=SchemeKind.sr, k=2, snr_db=0.0, trials=10)
        with pytest.raises(ValidationError):
            SimConfig(scheme=SchemeKind.sr, k=2, geometry=geometry, variances=variances, snr_db=0.0, trials=10)

    @pytest.mark.parametrize("field,value", [("k", 0), ("k", 21), ("trials", 0), ("seed", -1), ("min_errors", -1)])
    def test_rejects_out_of_range(self, field: str, value: int) -> None:
        """Counts and the seed are bounded."""
        kwargs = {"scheme": SchemeKind.sr, "k": 2, "geometry": NetworkGeometry(d=0.5, nu=2.0), "snr_db": 0.0}
        kwargs |= {"trials": 10, field: value}
        with pytest.raises(ValidationError):
            SimConfig(**kwargs)

    def test_variances_take_precedence(self) -> None:
        """Explicit variances are returned as given."""
        variances = LinkVariances(sd=1.0, sr=3.0, rd=5.0)
        config = SimConfig(scheme=SchemeKind.fscr, k=1, variances=variances, snr_db=0.0, trials=1)
        assert config.link_variances() == variances
