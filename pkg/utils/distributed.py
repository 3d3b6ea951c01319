import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, Iterable, List, TypeVar

from tqdm import tqdm

T = TypeVar("T")
R = TypeVar("R")


def resolve_workers(workers: int) -> int:
    """0 or negative means one worker per CPU (leaving one free)."""
    if workers > 0:
        return workers
    return max(1, (os.cpu_count() or 2) - 1)


def map_work_items(fn: Callable[[T], R], items: Iterable[T], workers: int = 1,
                   show_progress: bool = False, desc: str = "") -> Dict[T, R]:
    """Run fn over independent work items, serially or in a process pool.

    Results are keyed by item so callers can merge in a deterministic order
    regardless of completion order.
    """
    items: List[T] = list(items)
    n_workers = resolve_workers(workers)
    if n_workers == 1 or len(items) <= 1:
        return {item: fn(item) for item in tqdm(items, desc=desc, disable=not show_progress)}

    results: Dict[T, R] = {}
    chunksize = max(1, len(items) // (8 * n_workers))
    with ProcessPoolExecutor(max_workers=n_workers) as pool:
        mapped = pool.map(fn, items, chunksize=chunksize)
        for item, result in tqdm(zip(items, mapped), total=len(items), desc=desc, disable=not show_progress):
            results[item] = result
    return results
