"""Deterministic parallel map; SUPERSTEIN_THREADS caps the worker count."""

import os
from concurrent.futures import ThreadPoolExecutor


def thread_cap() -> int:
    try:
        n = int(os.environ.get("SUPERSTEIN_THREADS", "1"))
    except ValueError:
        return 1
    return max(1, n)


def pmap(fn, items, threads=None):
    """map(fn, items) preserving order; threaded when the cap allows."""
    n = thread_cap() if threads is None else max(1, threads)
    items = list(items)
    if n <= 1 or len(items) < 4:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as ex:
        return list(ex.map(fn, items))
