"""Concurrent evaluation of sweep points on an asyncio event loop."""

import asyncio
import contextlib
import inspect
import traceback
from collections.abc import Callable, Sequence
from datetime import datetime, timezone
from typing import Any

import ulid
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr

from .logging import get_logger
from .schemas import JobRecord, JobStatus

ULID = ulid.ULID

logger = get_logger(__name__)

type JobTarget = Callable[..., Any]


def _now() -> datetime:
    return datetime.now(timezone.utc)


def _consume_outcome(task: asyncio.Task[Any]) -> None:
    # outcomes are read through wait/get_result; keep asyncio from logging them as unretrieved
    if not task.cancelled():
        task.exception()


class AIOJobScheduler(BaseModel):
    """In-memory scheduler running each job as an asyncio task.

    Plain callables run in worker threads, coroutine functions are awaited on the loop.
    ``max_concurrency`` bounds how many jobs run at once. Job records are only touched
    from the owning event loop, so every method must be awaited on that loop.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    name: str = Field(default="relaylink")
    max_concurrency: int | None = Field(default=None, ge=1)

    _records: dict[ULID, JobRecord] = PrivateAttr(default_factory=dict)
    _results: dict[ULID, Any] = PrivateAttr(default_factory=dict)
    _tasks: dict[ULID, asyncio.Task[Any]] = PrivateAttr(default_factory=dict)
    _slots: asyncio.Semaphore | None = PrivateAttr(default=None)

    def model_post_init(self, context: Any, /) -> None:
        if self.max_concurrency is not None:
            self._slots = asyncio.Semaphore(self.max_concurrency)

    async def add_job(self, target: JobTarget, /, *args: Any, label: str | None = None, **kwargs: Any) -> ULID:
        """Schedule ``target(*args, **kwargs)`` and return the job id."""
        if not callable(target):
            raise TypeError(f"job target must be callable, got {type(target).__name__}")
        jid = ULID()
        self._records[jid] = JobRecord(id=jid, label=label, submitted_at=_now())
        task = asyncio.create_task(self._run(jid, target, args, kwargs), name=f"{self.name}-{label or jid}")
        task.add_done_callback(_consume_outcome)
        self._tasks[jid] = task
        return jid

    async def _run(self, jid: ULID, target: JobTarget, args: tuple[Any, ...], kwargs: dict[str, Any]) -> Any:
        try:
            if self._slots is None:
                return await self._execute(jid, target, args, kwargs)
            async with self._slots:
                return await self._execute(jid, target, args, kwargs)
        except asyncio.CancelledError:
            self._finish(jid, JobStatus.canceled)
            raise

    async def _execute(self, jid: ULID, target: JobTarget, args: tuple[Any, ...], kwargs: dict[str, Any]) -> Any:
        record = self._records[jid]
        record.status = JobStatus.running
        record.started_at = _now()
        try:
            if inspect.iscoroutinefunction(target):
                result = await target(*args, **kwargs)
            else:
                result = await asyncio.to_thread(target, *args, **kwargs)
        except Exception as exc:
            self._finish(jid, JobStatus.failed, error=f"{type(exc).__name__}: {exc}", tb=traceback.format_exc())
            raise
        self._results[jid] = result
        self._finish(jid, JobStatus.completed)
        return result

    def _finish(self, jid: ULID, status: JobStatus, error: str | None = None, tb: str | None = None) -> None:
        record = self._records[jid]
        record.status = status
        record.finished_at = _now()
        record.error = error
        record.error_traceback = tb

    def _record(self, job_id: ULID) -> JobRecord:
        try:
            return self._records[job_id]
        except KeyError:
            raise KeyError(f"Job {job_id} not found") from None

    async def get_record(self, job_id: ULID) -> JobRecord:
        """Snapshot of one job's record."""
        return self._record(job_id).model_copy(deep=True)

    async def get_status(self, job_id: ULID) -> JobStatus:
        return self._record(job_id).status

    async def get_all_records(self) -> list[JobRecord]:
        """Snapshots of every record in submission order."""
        return [record.model_copy(deep=True) for record in self._records.values()]

    async def get_result(self, job_id: ULID) -> Any:
        """Result of a completed job; RuntimeError with the error line for failed or unfinished jobs."""
        record = self._record(job_id)
        if record.status == JobStatus.completed:
            return self._results[job_id]
        if record.status == JobStatus.failed:
            raise RuntimeError(record.error or "Job failed")
        raise RuntimeError(f"Job not finished (status={record.status})")

    async def wait(self, job_id: ULID, timeout: float | None = None) -> None:
        """Wait for a job to finish; re-raises the job's exception."""
        self._record(job_id)
        await asyncio.wait_for(asyncio.shield(self._tasks[job_id]), timeout=timeout)

    async def cancel(self, job_id: ULID) -> bool:
        """Cancel a pending or running job; False when it had already finished."""
        self._record(job_id)
        task = self._tasks[job_id]
        if task.done():
            return False
        task.cancel()
        with contextlib.suppress(asyncio.CancelledError):
            await task
        return True

    async def map_ordered(
        self,
        target: JobTarget,
        items: Sequence[Any],
        /,
        *args: Any,
        label: Callable[[Any], str] | None = None,
    ) -> list[Any]:
        """Run ``target(item, *args)`` for every item and return the results in item order.

        The first failure cancels the jobs still pending or running, logs each failed job,
        and propagates.
        """
        job_ids = [await self.add_job(target, item, *args, label=label(item) if label else None) for item in items]
        try:
            for jid in job_ids:
                await self.wait(jid)
        except BaseException:
            for jid in job_ids:
                await self.cancel(jid)
            for jid in job_ids:
                record = self._records[jid]
                if record.status == JobStatus.failed:
                    logger.error("job_failed", label=record.label, error=record.error)
            raise
        return [self._results[jid] for jid in job_ids]
