"""Deterministic fan-out for sweep drivers.

Work is split into chunks whose boundaries depend only on the input range,
never on the worker count, and partial results are merged in chunk order.
Workers therefore change wall-clock time only; outputs are byte-identical
for any worker count.
"""

from concurrent.futures import ThreadPoolExecutor


def fixed_chunks(lo: int, hi: int, size: int) -> list[tuple[int, int]]:
    """Half-open [lo, hi) split into consecutive chunks of fixed size."""
    if size < 1:
        raise ValueError("chunk size must be >= 1")
    return [(start, min(start + size, hi)) for start in range(lo, hi, size)]


def run_chunks(fn, chunks, workers: int = 1) -> list:
    """Apply ``fn`` to every chunk, returning results in chunk order."""
    if workers <= 1 or len(chunks) <= 1:
        return [fn(c) for c in chunks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, chunks))
