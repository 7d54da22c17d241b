"""Rayleigh channel draws, max-min relay selection, and SNR sampling."""

from __future__ import annotations

from collections.abc import Iterator

import numpy as np

from ...core.schemas import LinkVariances, check_relay_count
from ...core.snr import db_to_linear
from ...core.types import FloatArray, IntArray
from ..stats.schemas import RelayHopRole
from .schemas import ChannelBatch, ChannelDraw, InstantSnrs


def complex_gaussian(rng: np.random.Generator, variance: float, size: int | tuple[int, ...]) -> np.ndarray:
    """Circularly-symmetric complex Gaussian samples with ``E|h|^2 = variance``."""
    scale = np.sqrt(variance / 2.0)
    return scale * (rng.standard_normal(size) + 1j * rng.standard_normal(size))


def draw_channel_batch(rng: np.random.Generator, variances: LinkVariances, k: int, n: int) -> ChannelBatch:
    """Draw ``n`` independent realizations of the direct link and K relay pairs."""
    check_relay_count(k)
    return ChannelBatch(
        h_sd=complex_gaussian(rng, variances.sd, n),
        h_sr=complex_gaussian(rng, variances.sr, (n, k)),
        h_rd=complex_gaussian(rng, variances.rd, (n, k)),
    )


def draw_channels(rng: np.random.Generator, variances: LinkVariances, k: int) -> ChannelDraw:
    """Draw one realization."""
    return draw_channel_batch(rng, variances, k, 1).draw(0)


def select_relay(snrs: InstantSnrs) -> int:
    """Relay maximizing ``min(gamma_sr, gamma_rd)``, lowest index on ties."""
    return snrs.selected


def select_relays(gamma_sr: FloatArray, gamma_rd: FloatArray) -> IntArray:
    """Row-wise max-min selection over arrays of shape (n, K)."""
    return np.argmax(np.minimum(gamma_sr, gamma_rd), axis=1)


SAMPLE_BLOCK = 2**16


def _hop_snr_blocks(
    rng: np.random.Generator,
    variances: LinkVariances,
    k: int,
    size: int,
    snr_db: float,
) -> Iterator[tuple[slice, FloatArray, FloatArray]]:
    """Yield per-relay hop SNRs block by block to bound memory for large sample counts."""
    check_relay_count(k)
    rho = db_to_linear(snr_db)
    for start in range(0, size, SAMPLE_BLOCK):
        stop = min(start + SAMPLE_BLOCK, size)
        gamma_sr = rho * np.abs(complex_gaussian(rng, variances.sr, (stop - start, k))) ** 2
        gamma_rd = rho * np.abs(complex_gaussian(rng, variances.rd, (stop - start, k))) ** 2
        yield slice(start, stop), gamma_sr, gamma_rd


def sample_selected_hop_snr(
    rng: np.random.Generator,
    variances: LinkVariances,
    k: int,
    role: RelayHopRole = RelayHopRole.relay_to_destination,
    size: int = 1,
    snr_db: float = 0.0,
) -> FloatArray:
    """Draw channels, select the relay, and return the requested hop SNR of the chosen relay."""
    out = np.empty(size, dtype=np.float64)
    for block, gamma_sr, gamma_rd in _hop_snr_blocks(rng, variances, k, size, snr_db):
        chosen = select_relays(gamma_sr, gamma_rd)[:, None]
        hop = gamma_rd if role == RelayHopRole.relay_to_destination else gamma_sr
        out[block] = np.take_along_axis(hop, chosen, axis=1)[:, 0]
    return out


def sample_max_bottleneck(
    rng: np.random.Generator,
    variances: LinkVariances,
    k: int,
    size: int = 1,
    snr_db: float = 0.0,
) -> FloatArray:
    """Samples of ``max_k min(gamma_sr_k, gamma_rd_k)``."""
    out = np.empty(size, dtype=np.float64)
    for block, gamma_sr, gamma_rd in _hop_snr_blocks(rng, variances, k, size, snr_db):
        out[block] = np.minimum(gamma_sr, gamma_rd).max(axis=1)
    return out
