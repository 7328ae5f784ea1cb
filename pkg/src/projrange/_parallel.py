"""Chunked thread-pool mapping, capped by the PROJRANGE_THREADS variable.

Work is split by index and results are concatenated in index order, so the
output never depends on the number of threads.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np


def thread_count() -> int:
    raw = os.environ.get("PROJRANGE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def map_chunks(fn, items: np.ndarray, threads: int | None = None):
    """Apply ``fn`` to contiguous chunks of ``items`` and concatenate along axis 0.

    ``fn`` may return an array or a tuple of arrays.
    """
    threads = thread_count() if threads is None else threads
    if threads <= 1 or len(items) < 2 * threads:
        return fn(items)
    chunks = np.array_split(items, threads)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(fn, chunks))
    if isinstance(parts[0], tuple):
        return tuple(np.concatenate(p, axis=0) for p in zip(*parts))
    return np.concatenate(parts, axis=0)
