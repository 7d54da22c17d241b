"""Pydantic schemas for channel realizations, simulation runs, and their estimates."""

from __future__ import annotations

from typing import Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from ...core.geometry import link_variances
from ...core.schemas import LinkVariances, NetworkGeometry, RelayCount, SchemeKind

MAX_SEED = 2**64 - 1


class ChannelDraw(BaseModel):
    """Complex gains of the direct link and of every relay's two hops for one symbol."""

    model_config = ConfigDict(frozen=True)

    h_sd: complex = Field(description="Source-destination gain")
    h_sr: tuple[complex, ...] = Field(min_length=1, description="Source-relay gains, one per relay")
    h_rd: tuple[complex, ...] = Field(min_length=1, description="Relay-destination gains, one per relay")

    @model_validator(mode="after")
    def _same_relay_count(self) -> Self:
        if len(self.h_sr) != len(self.h_rd):
            raise ValueError("h_sr and h_rd must have one gain per relay")
        return self


class ChannelBatch(BaseModel):
    """A batch of independent channel realizations stored as arrays."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    h_sd: np.ndarray = Field(description="Complex gains, shape (n,)")
    h_sr: np.ndarray = Field(description="Complex gains, shape (n, K)")
    h_rd: np.ndarray = Field(description="Complex gains, shape (n, K)")

    @property
    def size(self) -> int:
        """Number of realizations."""
        return int(self.h_sd.shape[0])

    @classmethod
    def from_draw(cls, draw: ChannelDraw) -> ChannelBatch:
        """Batch of one realization."""
        return cls(
            h_sd=np.array([draw.h_sd], dtype=np.complex128),
            h_sr=np.array([draw.h_sr], dtype=np.complex128),
            h_rd=np.array([draw.h_rd], dtype=np.complex128),
        )

    def draw(self, index: int) -> ChannelDraw:
        """Realization at one position of the batch."""
        return ChannelDraw(
            h_sd=complex(self.h_sd[index]),
            h_sr=tuple(complex(h) for h in self.h_sr[index]),
            h_rd=tuple(complex(h) for h in self.h_rd[index]),
        )


class InstantSnrs(BaseModel):
    """Instantaneous linear SNRs ``Es |h|^2 / N0`` of one channel realization."""

    model_config = ConfigDict(frozen=True)

    gamma_sd: float = Field(ge=0.0, description="Direct-link SNR")
    gamma_sr: tuple[float, ...] = Field(min_length=1, description="Source-relay SNRs")
    gamma_rd: tuple[float, ...] = Field(min_length=1, description="Relay-destination SNRs")

    @classmethod
    def from_draw(cls, draw: ChannelDraw, es_over_n0: float) -> InstantSnrs:
        """SNRs of a channel draw at a given Es/N0 (linear)."""
        return cls(
            gamma_sd=es_over_n0 * abs(draw.h_sd) ** 2,
            gamma_sr=tuple(es_over_n0 * abs(h) ** 2 for h in draw.h_sr),
            gamma_rd=tuple(es_over_n0 * abs(h) ** 2 for h in draw.h_rd),
        )

    @property
    def bottlenecks(self) -> tuple[float, ...]:
        """Per-relay ``min(gamma_sr, gamma_rd)``."""
        return tuple(min(sr, rd) for sr, rd in zip(self.gamma_sr, self.gamma_rd, strict=True))

    @property
    def selected(self) -> int:
        """Index of the max-min relay, lowest index on ties."""
        values = self.bottlenecks
        return values.index(max(values))

    @property
    def gamma_srstar(self) -> float:
        """First-hop SNR of the selected relay."""
        return self.gamma_sr[self.selected]

    @property
    def gamma_rstar_d(self) -> float:
        """Second-hop SNR of the selected relay."""
        return self.gamma_rd[self.selected]

    @property
    def beta(self) -> float:
        """MRC output SNR."""
        return self.gamma_sd + self.gamma_rstar_d

    @property
    def gamma_dsc(self) -> float:
        """Selection-combining output SNR."""
        return max(self.gamma_sd, self.gamma_rstar_d)


class SimConfig(BaseModel):
    """One Monte Carlo run: scheme, network, operating point, and stopping rule."""

    model_config = ConfigDict(frozen=True)

    scheme: SchemeKind
    k: RelayCount
    geometry: NetworkGeometry | None = Field(default=None, description="Linear network; exclusive with variances")
    variances: LinkVariances | None = Field(default=None, description="Explicit channel variances")
    snr_db: float = Field(allow_inf_nan=False, description="Es/N0 in decibels with N0 = 1")
    trials: int = Field(ge=1, description="Maximum number of transmitted symbols")
    seed: int = Field(default=0, ge=0, le=MAX_SEED, description="Reproducibility seed")
    min_errors: int = Field(default=200, ge=0, description="Early-stop error count; 0 disables early stopping")
    chunk_size: int = Field(default=2**16, ge=1, description="Symbols per random substream")
    noiseless: bool = Field(default=False, description="Drop all receiver noise (N0 -> 0 limit)")

    @model_validator(mode="after")
    def _one_network(self) -> Self:
        if (self.geometry is None) == (self.variances is None):
            raise ValueError("exactly one of geometry and variances must be given")
        return self

    def link_variances(self) -> LinkVariances:
        """Channel variances of the configured network."""
        if self.variances is not None:
            return self.variances
        assert self.geometry is not None
        return link_variances(self.geometry)


class BerEstimate(BaseModel):
    """Simulated BER with its Wilson 95% interval and relay-error diagnostics."""

    model_config = ConfigDict(frozen=True)

    errors: int = Field(ge=0, description="Destination bit errors")
    trials: int = Field(ge=1, description="Symbols simulated")
    prop_events: int = Field(ge=0, description="Symbols the selected relay decoded wrongly")
    ci95_low: float = Field(ge=0.0, le=1.0, description="Lower Wilson bound")
    ci95_high: float = Field(ge=0.0, le=1.0, description="Upper Wilson bound")
    stopped_early: bool = Field(default=False, description="Run ended on the error-count rule")

    @computed_field  # type: ignore[prop-decorator]
    @property
    def ber(self) -> float:
        """Errors per symbol."""
        return self.errors / self.trials

    @property
    def relay_error_rate(self) -> float:
        """Fraction of symbols the selected relay decoded wrongly."""
        return self.prop_events / self.trials

    @property
    def ci_half_width(self) -> float:
        """Half the width of the confidence interval."""
        return (self.ci95_high - self.ci95_low) / 2.0
