import asyncio
import logging
import multiprocessing
from typing import Callable, List, Optional, Sequence

LOGGER = logging.getLogger(__name__)


class WorkerCrashed(RuntimeError):
    pass


def _child(worker, item, connection):
    try:
        result = (True, worker(item))
    except BaseException as exc:  # noqa: B902
        result = (False, exc)
    try:
        connection.send(result)
    finally:
        connection.close()


async def run_in_process(worker: Callable, item, timeout: Optional[float] = None):
    """``worker(item)`` in a fresh process, terminated once ``timeout`` expires.

    Raises :class:`asyncio.TimeoutError` on expiry and re-raises whatever the
    worker raised.
    """
    loop = asyncio.get_running_loop()
    context = multiprocessing.get_context()
    receiver, sender = context.Pipe(duplex=False)
    process = context.Process(target=_child, args=(worker, item, sender), daemon=True)
    process.start()
    sender.close()
    try:
        ready = await loop.run_in_executor(None, receiver.poll, timeout)
        if not ready:
            raise asyncio.TimeoutError()
        try:
            ok, value = receiver.recv()
        except EOFError:
            raise WorkerCrashed(f"worker process exited with code {process.exitcode}") from None
    finally:
        receiver.close()
        if process.is_alive():
            process.terminate()
        process.join()
    if not ok:
        raise value
    return value


async def run_bounded(
    worker: Callable,
    items: Sequence,
    jobs: int = 1,
    timeout: Optional[float] = None,
    on_timeout: Optional[Callable] = None,
) -> List:
    """Apply ``worker`` to every item, at most ``jobs`` at a time.

    Results come back in input order. Without a ``timeout`` and with
    ``jobs <= 1`` everything runs inline; otherwise each item runs in its own
    process, and one that exceeds ``timeout`` is terminated and replaced by
    ``on_timeout(item)``.
    """
    items = list(items)
    if jobs <= 1 and timeout is None:
        return [worker(item) for item in items]

    semaphore = asyncio.Semaphore(max(jobs, 1))

    async def bounded(index, item):
        async with semaphore:
            try:
                return await run_in_process(worker, item, timeout)
            except asyncio.TimeoutError:
                LOGGER.warning(f"item {index} timed out after {timeout}s")
                return on_timeout(item) if on_timeout is not None else None

    return await asyncio.gather(*(bounded(i, item) for i, item in enumerate(items)))
