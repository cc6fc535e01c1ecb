import multiprocessing
import pickle
import time

import pytest

from aluffi_kit.errors import ResourceLimitExceeded, UnknownVariableError
from aluffi_kit.utils import run_bounded, run_in_process


@pytest.mark.asyncio
async def test_inline_keeps_order():
    assert await run_bounded(abs, [3, -1, -2]) == [3, 1, 2]


@pytest.mark.asyncio
async def test_pool_keeps_order():
    items = [-k for k in range(12)]
    assert await run_bounded(abs, items, jobs=3) == list(range(12))


@pytest.mark.asyncio
async def test_pool_replaces_timeouts():
    results = await run_bounded(
        time.sleep, [0, 2], jobs=2, timeout=0.5, on_timeout=lambda item: f"late {item}"
    )
    assert results == [None, "late 2"]


@pytest.mark.asyncio
async def test_single_job_timeout_is_enforced():
    start = time.perf_counter()
    results = await run_bounded(
        time.sleep, [30, 0], jobs=1, timeout=0.5, on_timeout=lambda item: f"late {item}"
    )
    assert results == ["late 30", None]
    assert time.perf_counter() - start < 10


@pytest.mark.asyncio
async def test_timed_out_worker_is_terminated():
    await run_bounded(time.sleep, [30, 30], jobs=2, timeout=0.2)
    assert multiprocessing.active_children() == []


@pytest.mark.asyncio
async def test_worker_errors_propagate():
    with pytest.raises(ValueError):
        await run_in_process(int, "not a number", timeout=30)


def test_errors_survive_pickling():
    error = pickle.loads(pickle.dumps(ResourceLimitExceeded("pairs", 5, 4)))
    assert (error.what, error.value, error.limit) == ("pairs", 5, 4)
    assert str(error) == "pairs reached 5 (limit 4)"
    assert pickle.loads(pickle.dumps(UnknownVariableError("q", 3))).offset == 3


@pytest.mark.asyncio
async def test_empty():
    assert await run_bounded(abs, [], jobs=4) == []
