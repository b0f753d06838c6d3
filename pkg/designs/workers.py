# designs/workers.py

import asyncio
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)

DEFAULT_WORKERS = int(os.getenv("PERMDESIGN_WORKERS", "1"))

T = TypeVar("T")
R = TypeVar("R")


def split(items: Sequence[T], parts: int) -> list[Sequence[T]]:
    """Contiguous chunks, at most `parts` of them, none empty."""
    parts = max(1, min(parts, len(items)))
    size, extra = divmod(len(items), parts)
    chunks, start = [], 0
    for i in range(parts):
        stop = start + size + (1 if i < extra else 0)
        chunks.append(items[start:stop])
        start = stop
    return [c for c in chunks if len(c)]


async def _gather(fn: Callable[[T], R], chunks: Sequence[T], workers: int) -> list[R]:
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(await asyncio.gather(*(loop.run_in_executor(pool, fn, chunk) for chunk in chunks)))


def fan_out(fn: Callable[[T], R], chunks: Sequence[T], workers: int | None = None) -> list[R]:
    """Run fn over every chunk; results come back in chunk order whatever the worker count.

    fn must be a module-level function so it can cross a process boundary.
    """
    workers = DEFAULT_WORKERS if workers is None else workers
    if workers <= 1 or len(chunks) <= 1:
        return [fn(chunk) for chunk in chunks]
    logger.debug(f"fanning {len(chunks)} chunks over {workers} workers")
    return asyncio.run(_gather(fn, chunks, workers))
