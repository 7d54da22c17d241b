"""Sweep execution: each operating point is a job on the asyncio scheduler."""

from __future__ import annotations

import asyncio
import os

import numpy as np

from ..core.exceptions import InvalidParameterError
from ..core.geometry import avg_snrs_from_geometry
from ..core.logging import get_logger, log_context
from ..core.scheduler import AIOJobScheduler
from ..core.schemas import NetworkGeometry
from ..modules.analytic import ber_asymptotic, ber_end_to_end
from ..modules.simlink import SimConfig, run_trials
from .schemas import BerCurvePoint, ExperimentSpec, SweepPoint

logger = get_logger(__name__)

THREADS_ENV = "RELAYLINK_THREADS"


def resolve_workers(workers: int | None = None) -> int:
    """Worker count from the flag, then ``RELAYLINK_THREADS``, then the machine."""
    if workers is None:
        env = os.getenv(THREADS_ENV)
        if env:
            try:
                workers = int(env)
            except ValueError:
                raise InvalidParameterError(
                    f"{THREADS_ENV} must be an integer, got {env!r}", field=THREADS_ENV
                ) from None
        else:
            workers = os.cpu_count() or 1
    if workers < 1:
        raise InvalidParameterError(f"worker count must be positive, got {workers}", field="workers", valid="[1, inf)")
    return workers


def point_seed(seed: int, index: int) -> int:
    """Seed of one sweep point, derived from the sweep seed and the point's position."""
    return int(np.random.SeedSequence([seed, index]).generate_state(1, np.uint64)[0])


def analytic_point(point: SweepPoint) -> BerCurvePoint:
    """Closed-form and asymptotic BER at one operating point."""
    snrs = avg_snrs_from_geometry(NetworkGeometry(d=point.d, nu=point.nu), point.snr_db)
    breakdown = ber_end_to_end(point.scheme, snrs, point.k)
    return BerCurvePoint(
        snr_db=point.snr_db,
        scheme=point.scheme,
        k=point.k,
        d=point.d,
        nu=point.nu,
        ber_analytic=breakdown.p_end_to_end,
        ber_asymptotic=ber_asymptotic(point.scheme, snrs, point.k),
    )


def simulated_point(point: SweepPoint, trials: int, seed: int, min_errors: int) -> BerCurvePoint:
    """Analytic columns plus a Monte Carlo estimate at one operating point."""
    row = analytic_point(point)
    estimate = run_trials(
        SimConfig(
            scheme=point.scheme,
            k=point.k,
            geometry=NetworkGeometry(d=point.d, nu=point.nu),
            snr_db=point.snr_db,
            trials=trials,
            seed=point_seed(seed, point.index),
            min_errors=min_errors,
        )
    )
    logger.debug(
        "sweep_point_simulated",
        index=point.index,
        errors=estimate.errors,
        trials=estimate.trials,
        relay_errors=estimate.prop_events,
    )
    return row.model_copy(
        update={
            "ber_sim": estimate.ber,
            "sim_trials": estimate.trials,
            "sim_errors": estimate.errors,
            "ci_low": estimate.ci95_low,
            "ci_high": estimate.ci95_high,
        }
    )


def _label(point: SweepPoint) -> str:
    return f"{point.scheme}/k={point.k}/d={point.d:g}/{point.snr_db:g}dB"


async def run_sweep(spec: ExperimentSpec, simulate: bool, workers: int | None = None) -> list[BerCurvePoint]:
    """Evaluate every sweep point concurrently and return rows in sweep order."""
    scheduler = AIOJobScheduler(max_concurrency=resolve_workers(workers))
    if simulate:
        return await scheduler.map_ordered(
            simulated_point, spec.points(), spec.trials, spec.seed, spec.min_errors, label=_label
        )
    return await scheduler.map_ordered(analytic_point, spec.points(), label=_label)


def _run(spec: ExperimentSpec, simulate: bool, workers: int | None) -> list[BerCurvePoint]:
    with log_context(command="simulate" if simulate else "analytic", seed=spec.seed):
        return asyncio.run(run_sweep(spec, simulate, workers))


def cmd_analytic(spec: ExperimentSpec, workers: int | None = None) -> list[BerCurvePoint]:
    """Analytic and asymptotic BER for every sweep point; simulation columns left empty."""
    return _run(spec, simulate=False, workers=workers)


def cmd_simulate(spec: ExperimentSpec, workers: int | None = None) -> list[BerCurvePoint]:
    """Analytic, asymptotic, and simulated BER for every sweep point."""
    return _run(spec, simulate=True, workers=workers)
