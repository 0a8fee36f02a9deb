"""
Order-preserving process-parallel map.
"""

import logging
from multiprocessing import Pool
from typing import Callable, List, Optional, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

logger = logging.getLogger(__name__)


def split_chunks(items: Sequence[T], chunk_size: int) -> List[List[T]]:
    """Split a sequence into consecutive chunks of at most chunk_size items"""
    if chunk_size < 1:
        raise ValueError("chunk_size must be >= 1")
    return [list(items[i:i + chunk_size]) for i in range(0, len(items), chunk_size)]


def parallel_map(
    fn: Callable[[T], R],
    items: Sequence[T],
    workers: int = 1,
    chunksize: Optional[int] = None,
) -> List[R]:
    """
    Map fn over items, returning results in input order.

    fn must be a picklable module-level callable (or functools.partial of
    one). With workers <= 1 or fewer than two items the map runs inline.

    Args:
        fn: Function applied to each item
        items: Work items
        workers: Number of worker processes
        chunksize: Items handed to a worker at a time

    Returns:
        List of results, same order as items
    """
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [fn(item) for item in items]

    processes = min(workers, len(items))
    if chunksize is None:
        chunksize = max(1, len(items) // (4 * processes))

    logger.debug(f"Dispatching {len(items)} items to {processes} workers (chunksize={chunksize})")
    with Pool(processes=processes) as pool:
        return pool.map(fn, items, chunksize=chunksize)


__all__ = ["parallel_map", "split_chunks"]
