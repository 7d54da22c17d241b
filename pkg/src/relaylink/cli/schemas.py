"""Pydantic schemas for experiment sweeps and the rows of the output curve table."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Annotated, Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core.schemas import RelayCount, SchemeKind
from ..modules.simlink.schemas import MAX_SEED

ClusterPosition = Annotated[float, Field(gt=0.0, lt=1.0, description="Relay-cluster distance d")]


class SnrRange(BaseModel):
    """Inclusive SNR axis ``start:step:stop`` in decibels."""

    model_config = ConfigDict(frozen=True)

    start: float = Field(allow_inf_nan=False)
    step: float = Field(gt=0.0, allow_inf_nan=False)
    stop: float = Field(allow_inf_nan=False)

    @model_validator(mode="after")
    def _ordered(self) -> Self:
        if self.stop < self.start:
            raise ValueError(f"stop ({self.stop:g}) must not be below start ({self.start:g})")
        return self

    @classmethod
    def parse(cls, text: str) -> SnrRange:
        """Parse ``START:STEP:STOP``."""
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"snr range must be START:STEP:STOP, got {text!r}")
        start, step, stop = (float(p) for p in parts)
        return cls(start=start, step=step, stop=stop)

    def values(self) -> list[float]:
        """Grid points from start to stop inclusive."""
        count = math.floor((self.stop - self.start) / self.step + 1e-9) + 1
        return [round(self.start + i * self.step, 10) for i in range(count)]

    def __str__(self) -> str:
        return f"{self.start:g}:{self.step:g}:{self.stop:g}"


class SweepPoint(BaseModel):
    """One operating point of a sweep, with its position in sweep order."""

    model_config = ConfigDict(frozen=True)

    index: int = Field(ge=0)
    scheme: SchemeKind
    k: RelayCount
    d: ClusterPosition
    nu: float = Field(ge=0.0)
    snr_db: float


class ExperimentSpec(BaseModel):
    """A sweep over schemes, relay counts, cluster positions, and SNR."""

    model_config = ConfigDict(frozen=True)

    schemes: tuple[SchemeKind, ...] = Field(min_length=1, description="Schemes to evaluate")
    k: tuple[RelayCount, ...] = Field(min_length=1, description="Relay counts")
    d: tuple[ClusterPosition, ...] = Field(min_length=1, description="Relay-cluster positions")
    nu: float = Field(default=2.0, ge=0.0, allow_inf_nan=False, description="Path-loss exponent")
    snr: SnrRange = Field(default_factory=lambda: SnrRange(start=0.0, step=2.0, stop=40.0))
    trials: int = Field(default=10**7, ge=1, description="Symbols per simulated point")
    seed: int = Field(default=0, ge=0, le=MAX_SEED, description="Sweep seed")
    min_errors: int = Field(default=200, ge=0, description="Early-stop error count per simulated point")
    out: Path | None = Field(default=None, description="CSV destination; stdout when absent")

    def points(self) -> list[SweepPoint]:
        """Operating points in output order: scheme, then K, then d, then SNR."""
        grid = [
            (scheme, k, d, snr_db)
            for scheme in self.schemes
            for k in self.k
            for d in self.d
            for snr_db in self.snr.values()
        ]
        return [
            SweepPoint(index=i, scheme=scheme, k=k, d=d, nu=self.nu, snr_db=snr_db)
            for i, (scheme, k, d, snr_db) in enumerate(grid)
        ]


class BerCurvePoint(BaseModel):
    """One row of the curve table: analytic, asymptotic, and optionally simulated BER."""

    model_config = ConfigDict(frozen=True)

    snr_db: float
    scheme: SchemeKind
    k: RelayCount
    d: ClusterPosition
    nu: float = Field(ge=0.0)
    ber_analytic: float = Field(ge=0.0, le=1.0)
    ber_asymptotic: float = Field(
        ge=0.0,
        description="High-SNR asymptote, bounded below only: at low SNR it can exceed 1",
    )
    ber_sim: float | None = Field(default=None, ge=0.0, le=1.0)
    sim_trials: int | None = Field(default=None, ge=1)
    sim_errors: int | None = Field(default=None, ge=0)
    ci_low: float | None = Field(default=None, ge=0.0, le=1.0)
    ci_high: float | None = Field(default=None, ge=0.0, le=1.0)

    @model_validator(mode="after")
    def _interval_brackets_estimate(self) -> Self:
        if self.ber_sim is None:
            return self
        if self.ci_low is not None and self.ci_low > self.ber_sim:
            raise ValueError("ci_low must not exceed ber_sim")
        if self.ci_high is not None and self.ci_high < self.ber_sim:
            raise ValueError("ci_high must not be below ber_sim")
        return self
