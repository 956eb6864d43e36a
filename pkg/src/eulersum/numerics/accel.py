"""
Extrapolation of partial sums.

Boundary series at roots of unity are summed in whole periods, which turns
the rotating terms into a smooth tail with an asymptotic expansion in
`K**-a * log(K)**b`. The partial sums are sampled at a geometric ladder of
such `K` and extrapolated by one of the `AccelMode` methods.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from itertools import product

import mpmath
import numpy as np

from .config import AccelMode

__all__ = [
    "aitken_iterated",
    "extrapolate",
    "levin_u",
    "plan_samples",
    "richardson_fit",
]

logger = logging.getLogger(__name__)

# (powers of 1/K, number of ladder points) by number of log factors
_LADDERS = {0: (6, 7), 1: (5, 11), 2: (4, 13)}
_FALLBACK_LADDER = (3, 13)

# relative rounding noise assumed in a partial sum
_NOISE = 1e-14


def _basis(log_degree: int, size: int) -> list[tuple[int, int]]:
    pairs = sorted(
        product(range(1, size + 1), range(log_degree + 1)),
        key=lambda ab: (ab[0], -ab[1]),
    )
    return pairs[:size]


def plan_samples(
    period: int, log_degree: int, max_terms: int, min_start: int = 0
) -> list[int]:
    """
    Choose the ladder of truncation points for a periodic series.

    Parameters
    ----------
    period
        Every truncation point is a multiple of it.
    log_degree
        The largest power of `log(K)` expected in the tail.
    max_terms
        No truncation point exceeds it (unless even the first one does).
    min_start
        A lower bound for the first point, used when geometric tails
        must have died out before the smooth expansion takes over.

    Returns
    -------
    list[int]
        Increasing truncation points, doubling at each step.
    """
    _, points = _LADDERS.get(log_degree, _FALLBACK_LADDER)
    m0 = 32 if log_degree == 0 else 64
    start = period * m0
    if min_start > start:
        start = period * math.ceil(min_start / period)
    # at least three points, even if the start has to come down
    while start * 4 > max_terms and start > period:
        start = period * max(1, start // period // 2)
    ks = [start * 2**i for i in range(points)]
    return [k for k in ks if k <= max_terms] or ks[:1]


def richardson_fit(
    ks: Sequence[int], sums: Sequence[complex], log_degree: int = 0
) -> tuple[complex, float]:
    """
    Fit `S(K) = S + sum c_ab K**-a log(K)**b` through the sampled sums.

    The error estimate compares the fit with the one that drops the first
    sample and the last basis function.
    """
    ks_arr = np.asarray(ks, dtype=float)
    sums_arr = np.asarray(sums, dtype=np.complex128)
    if ks_arr.size < 2:
        return complex(sums_arr[-1]), math.inf

    def solve(k: np.ndarray, s: np.ndarray) -> complex:
        cols = [np.ones_like(k)]
        for a, b in _basis(log_degree, k.size - 1):
            cols.append(k ** (-a) * np.log(k) ** b)
        mat = np.column_stack(cols)
        scale = np.abs(mat).max(axis=0)
        try:
            coef = np.linalg.solve(mat / scale, s)
        except np.linalg.LinAlgError:
            coef = np.linalg.lstsq(mat / scale, s, rcond=None)[0]
        return complex(coef[0] / scale[0])

    value = solve(ks_arr, sums_arr)
    if ks_arr.size == 2:
        err = abs(value - complex(sums_arr[-1]))
    else:
        err = abs(value - solve(ks_arr[1:], sums_arr[1:]))
    err += _NOISE * float(np.abs(sums_arr).max())
    logger.debug(
        "richardson: %d points, log degree %d, err %.2e",
        ks_arr.size,
        log_degree,
        err,
    )
    return value, err


def aitken_iterated(sums: Sequence[complex]) -> tuple[complex, float]:
    """Repeated Aitken delta-squared until fewer than three values remain."""
    seq = [complex(s) for s in sums]
    previous = seq[-1]
    while len(seq) >= 3:
        nxt = []
        for s0, s1, s2 in zip(seq, seq[1:], seq[2:]):
            denom = s2 - 2 * s1 + s0
            if denom == 0:
                nxt.append(s2)
            else:
                nxt.append(s2 - (s2 - s1) ** 2 / denom)
        previous, seq = seq[-1], nxt
    value = seq[-1]
    err = abs(value - previous) + _NOISE * max(abs(s) for s in sums)
    return value, err


def levin_u(sums: Sequence[complex], dps: int = 30) -> tuple[complex, float]:
    """
    Levin u-transform of a sequence of partial sums, via `mpmath`.

    The error estimate is the change caused by the last quarter of the
    sequence.
    """
    if len(sums) < 4:
        return complex(sums[-1]), abs(complex(sums[-1]) - complex(sums[-2]))
    with mpmath.workdps(dps):
        seq = [mpmath.mpc(complex(s)) for s in sums]
        transform = mpmath.mp.levin(method="levin", variant="u")
        try:
            transform.update_psum(seq[: len(seq) - len(seq) // 4])
            value, err = transform.update_psum(seq)
        except (ValueError, ZeroDivisionError):
            return complex(sums[-1]), abs(seq[-1] - seq[-2])
        value, err = complex(value), float(err)
    return value, err + _NOISE * max(abs(complex(s)) for s in sums)


def extrapolate(
    ks: Sequence[int],
    sums: Sequence[complex],
    mode: AccelMode,
    log_degree: int = 0,
) -> tuple[complex, float]:
    """Dispatch on `mode`; `AccelMode.NONE` returns the last sum."""
    mode = AccelMode(mode)
    if mode is AccelMode.RICHARDSON:
        return richardson_fit(ks, sums, log_degree)
    if mode is AccelMode.AITKEN:
        return aitken_iterated(sums)
    if mode is AccelMode.LEVIN:
        return levin_u(sums)
    last = complex(sums[-1])
    return last, abs(last - complex(sums[-2])) if len(sums) > 1 else math.inf
