"""Simlink feature - Monte Carlo simulation of opportunistic decode-and-forward links."""

from .channel import (
    complex_gaussian,
    draw_channel_batch,
    draw_channels,
    sample_max_bottleneck,
    sample_selected_hop_snr,
    select_relay,
    select_relays,
)
from .schemas import BerEstimate, ChannelBatch, ChannelDraw, InstantSnrs, SimConfig
from .simulator import awgn, run_trials, simulate_batch, simulate_symbol, wilson_interval

__all__ = [
    # Schemas
    "ChannelDraw",
    "ChannelBatch",
    "InstantSnrs",
    "SimConfig",
    "BerEstimate",
    # Channels and selection
    "complex_gaussian",
    "draw_channels",
    "draw_channel_batch",
    "select_relay",
    "select_relays",
    "sample_selected_hop_snr",
    "sample_max_bottleneck",
    # Simulation
    "awgn",
    "simulate_batch",
    "simulate_symbol",
    "run_trials",
    "wilson_interval",
]
