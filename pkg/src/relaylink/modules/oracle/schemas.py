"""Pydantic schema for numerical integration results."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


class QuadratureResult(BaseModel):
    """Value of an adaptive integral with its error estimate and cost."""

    model_config = ConfigDict(frozen=True)

    value: float = Field(description="Integral estimate")
    abs_error_estimate: float = Field(ge=0.0, description="Absolute error estimate reported by the integrator")
    evaluations: int = Field(ge=0, description="Integrand evaluations spent")
