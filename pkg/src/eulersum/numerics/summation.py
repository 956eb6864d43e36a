from __future__ import annotations

import math
from collections.abc import Iterable

import numpy as np

__all__ = [
    "Accumulator",
    "ComplexAccumulator",
    "compensated_sum",
    "running_sum",
]

_BLOCK = 256


def _two_sum(u: float, v: float) -> tuple[float, float]:
    # u + v == s + t exactly
    s = u + v
    up = s - v
    vpp = s - up
    up -= u
    vpp -= v
    return s, -(up + vpp)


class Accumulator:
    """A running float sum kept as an unevaluated pair `s + t`."""

    __slots__ = ("_s", "_t")

    def __init__(self, y: float = 0.0) -> None:
        self._s, self._t = float(y), 0.0

    def add(self, y: float) -> None:
        y, u = _two_sum(float(y), self._t)
        self._s, self._t = _two_sum(y, self._s)
        if self._s == 0:
            self._s = u
        else:
            self._t += u

    @property
    def total(self) -> float:
        return self._s


class ComplexAccumulator:
    __slots__ = ("_re", "_im")

    def __init__(self, y: complex = 0j) -> None:
        y = complex(y)
        self._re = Accumulator(y.real)
        self._im = Accumulator(y.imag)

    def add(self, y: complex) -> None:
        self._re.add(y.real)
        self._im.add(y.imag)

    @property
    def total(self) -> complex:
        return complex(self._re.total, self._im.total)


def compensated_sum(values: Iterable[complex] | np.ndarray) -> complex:
    """Correctly rounded sum of complex values, part by part."""
    arr = np.asarray(
        values if isinstance(values, np.ndarray) else list(values),
        dtype=np.complex128,
    )
    return complex(math.fsum(arr.real), math.fsum(arr.imag))


def running_sum(values: np.ndarray, block: int = _BLOCK) -> np.ndarray:
    """
    Prefix sums of a complex array with compensated block offsets.

    Within a block of `block` entries the plain `np.cumsum` is used; the
    offsets carried between blocks go through a `ComplexAccumulator`, so the
    rounding error does not grow with the length of the array.

    Parameters
    ----------
    values
        The terms to add up.
    block
        Entries per block.

    Returns
    -------
    np.ndarray
        `out[i] == values[0] + ... + values[i]` up to rounding.
    """
    values = np.asarray(values, dtype=np.complex128)
    n = values.size
    if n == 0:
        return values.copy()
    pad = (-n) % block
    grid = np.concatenate(
        [values, np.zeros(pad, dtype=np.complex128)]
    ).reshape(-1, block)
    inner = np.cumsum(grid, axis=1)
    offsets = np.empty(grid.shape[0], dtype=np.complex128)
    acc = ComplexAccumulator()
    for i, block_total in enumerate(inner[:, -1]):
        offsets[i] = acc.total
        acc.add(complex(block_total))
    return (inner + offsets[:, None]).ravel()[:n]
