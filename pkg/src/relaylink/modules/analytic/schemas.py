"""Pydantic schema for the intermediate and end-to-end error probabilities."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from ...core.schemas import RelayCount, SchemeKind


class BerBreakdown(BaseModel):
    """End-to-end BER of one scheme together with the probabilities it is composed from.

    Every scheme follows ``p_e = p_prop * p_sr_star + (1 - p_sr_star) * p_combiner``.
    For selection relaying the direct link is unused, so every relay error
    reaches the destination and ``p_prop`` is 1.
    """

    model_config = ConfigDict(frozen=True)

    scheme: SchemeKind = Field(description="Scheme the breakdown belongs to")
    k: RelayCount
    p_prop: float = Field(ge=0.0, le=1.0, description="Probability that a relay decoding error reaches the destination")
    p_sr_star: float = Field(ge=0.0, le=1.0, description="BER of the source to selected-relay hop")
    p_combiner: float = Field(
        ge=0.0, le=1.0, description="BER of the destination detector given a correct relay (MRC, SC, or relay-only)"
    )
    p_end_to_end: float = Field(ge=0.0, le=1.0, description="End-to-end BER")
    jittered: bool = Field(default=False, description="Direct-link average was perturbed off a removable pole")

    def recompose(self) -> float:
        """Recompute the end-to-end BER from the intermediate probabilities."""
        return self.p_prop * self.p_sr_star + (1.0 - self.p_sr_star) * self.p_combiner
