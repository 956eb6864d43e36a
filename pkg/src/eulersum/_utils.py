import uuid
from collections.abc import Iterator
from math import comb


def _get_unique_name(n: int = 10) -> str:
    if n < 8:
        raise ValueError(
            "`n` must be at least 8 to ensure uniqueness of the name."
        )
    return uuid.uuid4().hex[:n]


def _binom(n: int, k: int) -> int:
    """`C(n, k)`, zero outside `0 <= k <= n`."""
    if n < 0 or k < 0:
        return 0
    return comb(n, k)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """
    All tuples of `parts` nonnegative integers adding up to `total`.

    These index the multi-sums `sum_{k_1+...+k_r=total}` that residue
    computations produce. Zero parts admit only the empty tuple at
    `total = 0`.
    """
    if total < 0:
        return
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head, *rest)


def _bounded_compositions(
    total: int, parts: int
) -> Iterator[tuple[int, ...]]:
    """Tuples of `parts` nonnegative integers adding up to at most `total`."""
    for t in range(total + 1):
        yield from _compositions(t, parts)

