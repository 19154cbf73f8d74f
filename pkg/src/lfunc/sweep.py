"""
Concurrent per-prime evaluation with order-preserving merge

Workers run exact integer and numpy work only; mpmath keeps its precision
in global state, so numeric reduction stays on the calling thread.
"""
import asyncio
import logging
from typing import Callable, List, Sequence, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")

CHUNKS_PER_THREAD = 4


def chunked(items: Sequence[int], count: int) -> List[Sequence[int]]:
    """Split into at most count contiguous, nonempty runs"""
    count = max(1, min(count, len(items)))
    size, extra = divmod(len(items), count)
    chunks, start = [], 0
    for i in range(count):
        end = start + size + (1 if i < extra else 0)
        chunks.append(items[start:end])
        start = end
    return [c for c in chunks if len(c)]


async def sweep_primes(primes: Sequence[int], func: Callable[[int], T], threads: int = 1) -> List[T]:
    """func(p) for every p, in the order given, using up to threads workers"""
    if not primes:
        return []
    semaphore = asyncio.Semaphore(max(1, threads))
    chunks = chunked(list(primes), max(1, threads) * CHUNKS_PER_THREAD)

    async def run(chunk: Sequence[int]) -> List[T]:
        async with semaphore:
            return await asyncio.to_thread(lambda: [func(p) for p in chunk])

    logger.debug("sweeping %d primes in %d chunks on %d threads", len(primes), len(chunks), threads)
    results = await asyncio.gather(*(run(chunk) for chunk in chunks))
    return [item for chunk in results for item in chunk]


def run_sweep(primes: Sequence[int], func: Callable[[int], T], threads: int = 1) -> List[T]:
    """Blocking wrapper around sweep_primes; sequential when threads == 1"""
    if threads <= 1:
        return [func(p) for p in primes]
    return asyncio.run(sweep_primes(primes, func, threads))
