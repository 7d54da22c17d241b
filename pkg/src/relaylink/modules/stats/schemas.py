"""Enumerations selecting hop orientation and singularity handling."""

from __future__ import annotations

from enum import StrEnum


class RelayHopRole(StrEnum):
    """Which hop of the selected relay a statistic describes."""

    source_to_relay = "source_to_relay"
    relay_to_destination = "relay_to_destination"


class SingularityPolicy(StrEnum):
    """What to do when the direct-link average collides with a pole of the convolution form."""

    raise_error = "raise"
    jitter = "jitter"
