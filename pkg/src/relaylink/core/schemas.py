"""Core Pydantic schemas for link parameters, schemes, problems, and jobs."""

from __future__ import annotations

from datetime import datetime
from enum import StrEnum
from typing import Annotated, Any

import ulid
from pydantic import BaseModel, ConfigDict, Field, computed_field

from .exceptions import InvalidParameterError, RelaylinkException
from .snr import bottleneck_avg, db_to_linear

ULID = ulid.ULID

MAX_RELAYS = 20

RelayCount = Annotated[int, Field(ge=1, le=MAX_RELAYS, description="Number of candidate relays K")]


def check_relay_count(k: int) -> int:
    """Validate K against the cap on the alternating binomial sums."""
    if isinstance(k, bool) or not isinstance(k, int) or not 1 <= k <= MAX_RELAYS:
        raise InvalidParameterError(
            f"relay count K must be an integer in [1, {MAX_RELAYS}], got {k!r}",
            field="k",
            valid=f"[1, {MAX_RELAYS}]",
        )
    return k


# Link parameters


class SchemeKind(StrEnum):
    """Opportunistic decode-and-forward scheme."""

    fscr = "fscr"
    dsc = "dsc"
    sr = "sr"


class NetworkGeometry(BaseModel):
    """Linear network with the relay cluster at normalized distance d from the source."""

    model_config = ConfigDict(frozen=True)

    d: float = Field(gt=0.0, lt=1.0, description="Source-to-cluster distance as a fraction of source-destination")
    nu: float = Field(ge=0.0, allow_inf_nan=False, description="Path-loss exponent")


class LinkVariances(BaseModel):
    """Mean channel powers E|h|^2 of the three link types."""

    model_config = ConfigDict(frozen=True)

    sd: float = Field(gt=0.0, allow_inf_nan=False, description="Source-destination channel variance")
    sr: float = Field(gt=0.0, allow_inf_nan=False, description="Source-relay channel variance")
    rd: float = Field(gt=0.0, allow_inf_nan=False, description="Relay-destination channel variance")

    def avg_snrs(self, snr_db: float) -> AvgSnrTriple:
        """Average SNRs at a given Es/N0 in decibels with unit noise power."""
        rho = db_to_linear(snr_db)
        return AvgSnrTriple(gbar_sd=rho * self.sd, gbar_sr=rho * self.sr, gbar_rd=rho * self.rd)


class AvgSnrTriple(BaseModel):
    """Average linear SNRs of the direct, first-hop and second-hop links."""

    model_config = ConfigDict(frozen=True)

    gbar_sd: float = Field(gt=0.0, allow_inf_nan=False, description="Average direct-link SNR")
    gbar_sr: float = Field(gt=0.0, allow_inf_nan=False, description="Average source-to-relay SNR")
    gbar_rd: float = Field(gt=0.0, allow_inf_nan=False, description="Average relay-to-destination SNR")

    @computed_field  # type: ignore[prop-decorator]
    @property
    def gbar(self) -> float:
        """Bottleneck average, the exponential parameter of min(gamma_sr, gamma_rd)."""
        return bottleneck_avg(self.gbar_sr, self.gbar_rd)

    def swapped(self) -> AvgSnrTriple:
        """Exchange the two hop averages."""
        return AvgSnrTriple(gbar_sd=self.gbar_sd, gbar_sr=self.gbar_rd, gbar_rd=self.gbar_sr)

    def scaled(self, factor: float) -> AvgSnrTriple:
        """Multiply all three averages by a positive factor."""
        return AvgSnrTriple(
            gbar_sd=self.gbar_sd * factor,
            gbar_sr=self.gbar_sr * factor,
            gbar_rd=self.gbar_rd * factor,
        )

    def with_direct(self, gbar_sd: float) -> AvgSnrTriple:
        """Replace the direct-link average."""
        return AvgSnrTriple(gbar_sd=gbar_sd, gbar_sr=self.gbar_sr, gbar_rd=self.gbar_rd)

    @property
    def largest(self) -> float:
        """Largest of the three averages."""
        return max(self.gbar_sd, self.gbar_sr, self.gbar_rd)


# Problem details


class ProblemDetail(BaseModel):
    """Problem description with URN error type, exit status, and human-readable messages."""

    type: str = Field(default="about:blank", description="URN identifying the problem type")
    title: str = Field(description="Short, human-readable summary of the problem type")
    exit_code: int = Field(description="Process exit status", ge=0, le=255)
    detail: str | None = Field(default=None, description="Explanation specific to this occurrence")
    extensions: dict[str, Any] = Field(default_factory=dict, description="Field names, intervals, line numbers")

    @classmethod
    def from_exception(cls, exc: RelaylinkException) -> ProblemDetail:
        """Build a problem detail from a relaylink exception."""
        return cls(
            type=exc.type_uri,
            title=exc.title,
            exit_code=exc.exit_code,
            detail=exc.detail,
            extensions={key: value for key, value in exc.extensions.items() if value is not None},
        )


# Job schemas


class JobStatus(StrEnum):
    """Status of a scheduled job."""

    pending = "pending"
    running = "running"
    completed = "completed"
    failed = "failed"
    canceled = "canceled"


class JobRecord(BaseModel):
    """Complete record of a scheduled job's state and metadata."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    id: ULID = Field(description="Unique job identifier")
    label: str | None = Field(default=None, description="Caller-supplied description of the job")
    status: JobStatus = Field(default=JobStatus.pending, description="Current job status")
    submitted_at: datetime | None = Field(default=None, description="When the job was submitted")
    started_at: datetime | None = Field(default=None, description="When the job started running")
    finished_at: datetime | None = Field(default=None, description="When the job finished")
    error: str | None = Field(default=None, description="User-friendly error message if job failed")
    error_traceback: str | None = Field(default=None, description="Full error traceback for debugging")
