"""Symbol-level simulation of the two-phase opportunistic decode-and-forward protocol.

Phase one: the source broadcasts a BPSK symbol to the destination and to every
relay. Phase two: the max-min relay hard-decodes its observation and forwards
its decision, right or wrong. The destination then applies MRC (FSCR),
selection of the stronger branch (DSC), or decodes the relayed branch alone
(SR). Noise power is 1 and the symbol energy equals the linear Es/N0.
"""

from __future__ import annotations

import numpy as np
from scipy.stats import binomtest

from ...core.logging import get_logger
from ...core.schemas import SchemeKind
from ...core.snr import db_to_linear
from ...core.types import BoolArray, ComplexArray
from .channel import draw_channel_batch, select_relays
from .schemas import BerEstimate, ChannelBatch, ChannelDraw, SimConfig

logger = get_logger(__name__)


def awgn(rng: np.random.Generator, size: int, noiseless: bool = False) -> ComplexArray:
    """Unit-variance complex Gaussian noise, or zeros in the noiseless limit."""
    if noiseless:
        return np.zeros(size, dtype=np.complex128)
    return np.sqrt(0.5) * (rng.standard_normal(size) + 1j * rng.standard_normal(size))


def _hard_decision(metric: np.ndarray) -> np.ndarray:
    return np.where(metric >= 0.0, 1.0, -1.0)


def simulate_batch(
    rng: np.random.Generator,
    scheme: SchemeKind,
    batch: ChannelBatch,
    es_over_n0: float,
    noiseless: bool = False,
) -> tuple[BoolArray, BoolArray]:
    """Send one symbol per realization; return destination and relay error indicators."""
    n = batch.size
    amplitude = np.sqrt(es_over_n0)
    symbols = 1.0 - 2.0 * rng.integers(0, 2, size=n)

    rows = np.arange(n)
    chosen = select_relays(np.abs(batch.h_sr) ** 2, np.abs(batch.h_rd) ** 2)
    h_sr = batch.h_sr[rows, chosen]
    h_rd = batch.h_rd[rows, chosen]
    h_sd = batch.h_sd

    # phase one
    y_d = amplitude * h_sd * symbols + awgn(rng, n, noiseless)
    y_r = amplitude * h_sr * symbols + awgn(rng, n, noiseless)
    relayed = _hard_decision(np.real(np.conj(h_sr) * y_r))

    # phase two
    y_d2 = amplitude * h_rd * relayed + awgn(rng, n, noiseless)
    direct_metric = np.real(np.conj(h_sd) * y_d)
    relay_metric = np.real(np.conj(h_rd) * y_d2)

    match SchemeKind(scheme):
        case SchemeKind.fscr:
            metric = direct_metric + relay_metric
        case SchemeKind.dsc:
            metric = np.where(np.abs(h_sd) ** 2 >= np.abs(h_rd) ** 2, direct_metric, relay_metric)
        case SchemeKind.sr:
            metric = relay_metric

    return _hard_decision(metric) != symbols, relayed != symbols


def simulate_symbol(rng: np.random.Generator, config: SimConfig, draw: ChannelDraw) -> tuple[bool, bool]:
    """Send a single symbol over one channel draw; return (bit error, relay error)."""
    errors, relay_errors = simulate_batch(
        rng,
        config.scheme,
        ChannelBatch.from_draw(draw),
        db_to_linear(config.snr_db),
        noiseless=config.noiseless,
    )
    return bool(errors[0]), bool(relay_errors[0])


def wilson_interval(errors: int, trials: int, confidence: float = 0.95) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    ci = binomtest(errors, trials).proportion_ci(confidence_level=confidence, method="wilson")
    return float(ci.low), float(ci.high)


def run_trials(config: SimConfig) -> BerEstimate:
    """Simulate up to ``config.trials`` symbols and return the BER estimate.

    Symbols are processed in chunks of ``chunk_size``, each drawn from its own
    Philox substream spawned from the seed, and counted in chunk order. The
    run stops after the first chunk at which both ``min_errors`` errors and a
    tenth of the requested trials have been reached.
    """
    variances = config.link_variances()
    es_over_n0 = db_to_linear(config.snr_db)
    n_chunks = -(-config.trials // config.chunk_size)
    min_trials = -(-config.trials // 10)
    streams = np.random.SeedSequence(config.seed).spawn(n_chunks)

    errors = relay_errors = done = 0
    stopped_early = False
    for stream in streams:
        size = min(config.chunk_size, config.trials - done)
        rng = np.random.Generator(np.random.Philox(stream))
        batch = draw_channel_batch(rng, variances, config.k, size)
        err, rel = simulate_batch(rng, config.scheme, batch, es_over_n0, noiseless=config.noiseless)
        errors += int(err.sum())
        relay_errors += int(rel.sum())
        done += size
        if done < config.trials and config.min_errors > 0 and errors >= config.min_errors and done >= min_trials:
            stopped_early = True
            logger.debug("trials_stopped_early", errors=errors, trials=done, requested=config.trials)
            break

    low, high = wilson_interval(errors, done)
    return BerEstimate(
        errors=errors,
        trials=done,
        prop_events=relay_errors,
        ci95_low=low,
        ci95_high=high,
        stopped_early=stopped_early,
    )
