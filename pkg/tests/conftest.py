"""Test configuration and shared fixtures."""

from collections.abc import Iterator

import numpy as np
import pytest

from relaylink.cli.registry import CheckRegistry
from relaylink.core import AvgSnrTriple, NetworkGeometry, avg_snrs_from_geometry


@pytest.fixture
def mid_snrs() -> AvgSnrTriple:
    """Cluster at mid distance, 20 dB; sits on the pole 2 * gbar_sd = gbar."""
    return avg_snrs_from_geometry(NetworkGeometry(d=0.5, nu=2.0), 20.0)


@pytest.fixture
def near_snrs() -> AvgSnrTriple:
    """Cluster near the source, 10 dB."""
    return avg_snrs_from_geometry(NetworkGeometry(d=0.1, nu=2.0), 10.0)


@pytest.fixture
def generic_snrs() -> AvgSnrTriple:
    """Averages with no coincident poles for any K up to 4."""
    return AvgSnrTriple(gbar_sd=3.0, gbar_sr=7.0, gbar_rd=5.0)


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded Philox generator."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(1234)))


@pytest.fixture
def registry_snapshot() -> Iterator[None]:
    """Restore the check registry after a test that mutates it."""
    saved = dict(CheckRegistry._registry)
    try:
        yield
    finally:
        CheckRegistry._registry.clear()
        CheckRegistry._registry.update(saved)
