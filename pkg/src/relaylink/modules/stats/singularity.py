"""Detection and jittering of the removable poles in the direct-plus-relay convolution."""

from __future__ import annotations

from ...core.exceptions import NearSingularParametersError
from ...core.logging import get_logger
from ...core.schemas import AvgSnrTriple
from .schemas import SingularityPolicy

logger = get_logger(__name__)

SINGULAR_RTOL = 1e-9
JITTER_RTOL = 1e-7


def _close(x: float, y: float) -> bool:
    return abs(x - y) < SINGULAR_RTOL * max(abs(x), abs(y))


def singular_collisions(snrs: AvgSnrTriple, k: int) -> list[str]:
    """Name every equality ``gbar_sd = gbar_rd`` or ``i * gbar_sd = gbar`` that holds within tolerance."""
    hits: list[str] = []
    if _close(snrs.gbar_sd, snrs.gbar_rd):
        hits.append("gbar_sd = gbar_rd")
    gbar = snrs.gbar
    for i in range(1, k + 1):
        if _close(i * snrs.gbar_sd, gbar):
            hits.append(f"{i} * gbar_sd = gbar")
    return hits


def resolve_singularity(
    snrs: AvgSnrTriple,
    k: int,
    policy: SingularityPolicy = SingularityPolicy.jitter,
) -> tuple[AvgSnrTriple, bool]:
    """Return parameters safe for the convolution form and whether they were perturbed."""
    hits = singular_collisions(snrs, k)
    if not hits:
        return snrs, False
    if policy == SingularityPolicy.raise_error:
        raise NearSingularParametersError(
            f"direct-link average collides with a pole: {', '.join(hits)}",
            collisions=hits,
            gbar_sd=snrs.gbar_sd,
            gbar_sr=snrs.gbar_sr,
            gbar_rd=snrs.gbar_rd,
        )
    jittered = snrs.with_direct(snrs.gbar_sd * (1.0 + JITTER_RTOL))
    logger.debug("singular_parameters_jittered", collisions=hits, gbar_sd=snrs.gbar_sd)
    return jittered, True
