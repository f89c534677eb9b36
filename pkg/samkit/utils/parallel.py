import logging
import multiprocessing as mp
import os
from typing import Callable, Iterable, List

logger = logging.getLogger(__name__)


def resolve_threads(threads: int) -> int:
    """0 means one worker per cpu."""
    threads = int(threads)
    if threads < 0:
        raise ValueError(f"threads must be >= 0, got {threads}.")
    return threads or (os.cpu_count() or 1)


def parallel_map(func: Callable, items: Iterable, threads: int = 1, chunksize: int = 1) -> List:
    """
    [func(item) for item in items], spread over a process pool when more than one worker is asked for. The result
    keeps the input order, so callers get the same list whatever the number of workers. func must be picklable
    (a module level function or a functools.partial of one).
    """
    items = list(items)
    workers = min(resolve_threads(threads), len(items))
    if workers <= 1:
        return [func(item) for item in items]
    logger.debug("Mapping %d work items over %d processes.", len(items), workers)
    with mp.Pool(processes=workers) as pool:
        return pool.map(func, items, chunksize=max(1, int(chunksize)))
