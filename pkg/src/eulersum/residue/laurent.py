from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from math import comb
from numbers import Number

import numpy as np

from .._errors import DomainError, UnknownCoefficientError

__all__ = [
    "LaurentSeries",
    "ls_add",
    "ls_coeff",
    "ls_mul",
    "ls_residue",
    "ls_scale",
    "monomial",
    "pole_shift_binomial",
]


@dataclass(frozen=True)
class LaurentSeries:
    """
    A truncated Laurent expansion around `center`.

    `coeffs[i]` multiplies `(s - center)**(min_order + i)`. Orders below
    `min_order` are known zeros; orders above `trunc_order` are unknown, and
    reading one raises `UnknownCoefficientError`.
    """

    center: complex
    min_order: int
    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(
            self, "coeffs", tuple(complex(c) for c in self.coeffs)
        )

    @property
    def trunc_order(self) -> int:
        return self.min_order + len(self.coeffs) - 1

    def coeff(self, k: int) -> complex:
        return ls_coeff(self, k)

    def residue(self) -> complex:
        return ls_residue(self)

    def evaluate(self, s: complex) -> complex:
        """Sum the known window at the point `s`."""
        h = s - self.center
        return complex(
            sum(
                c * h ** (self.min_order + i)
                for i, c in enumerate(self.coeffs)
            )
        )

    def __add__(self, other: LaurentSeries) -> LaurentSeries:
        return ls_add(self, other)

    def __neg__(self) -> LaurentSeries:
        return ls_scale(-1, self)

    def __sub__(self, other: LaurentSeries) -> LaurentSeries:
        return ls_add(self, ls_scale(-1, other))

    def __mul__(self, other: LaurentSeries | Number) -> LaurentSeries:
        if isinstance(other, LaurentSeries):
            return ls_mul(self, other)
        if isinstance(other, Number):
            return ls_scale(other, self)  # type: ignore[arg-type]
        return NotImplemented

    def __rmul__(self, other: Number) -> LaurentSeries:
        return ls_scale(other, self)  # type: ignore[arg-type]


def _check_centers(a: LaurentSeries, b: LaurentSeries) -> None:
    if a.center != b.center:
        raise DomainError(
            f"`a` and `b` must share a center, got {a.center} and {b.center}."
        )


def _window(a: LaurentSeries, lo: int, hi: int) -> np.ndarray:
    # coefficients of a on [lo, hi], zero below a.min_order; hi <= trunc
    out = np.zeros(max(0, hi - lo + 1), dtype=np.complex128)
    for k in range(max(lo, a.min_order), hi + 1):
        out[k - lo] = a.coeffs[k - a.min_order]
    return out


def ls_add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    """
    Add two series with the same center.

    The result is known up to the smaller of the two truncation orders.
    """
    _check_centers(a, b)
    lo = min(a.min_order, b.min_order)
    hi = min(a.trunc_order, b.trunc_order)
    coeffs = _window(a, lo, hi) + _window(b, lo, hi)
    return LaurentSeries(a.center, lo, tuple(coeffs))


def ls_scale(c: complex, a: LaurentSeries) -> LaurentSeries:
    return LaurentSeries(
        a.center, a.min_order, tuple(complex(c) * x for x in a.coeffs)
    )


def ls_mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    """
    The Cauchy product on the window both factors determine.

    `min_order` adds up and the truncation order is
    `min(a.min_order + b.trunc_order, a.trunc_order + b.min_order)`.
    """
    _check_centers(a, b)
    lo = a.min_order + b.min_order
    hi = min(a.min_order + b.trunc_order, a.trunc_order + b.min_order)
    length = max(0, hi - lo + 1)
    if length == 0 or not a.coeffs or not b.coeffs:
        return LaurentSeries(a.center, lo, ())
    coeffs = np.convolve(
        np.asarray(a.coeffs, dtype=np.complex128),
        np.asarray(b.coeffs, dtype=np.complex128),
    )[:length]
    return LaurentSeries(a.center, lo, tuple(coeffs))


def ls_coeff(a: LaurentSeries, k: int) -> complex:
    """
    The coefficient of `(s - center)**k`.

    Raises
    ------
    UnknownCoefficientError
        When `k` lies above the truncation order.
    """
    if k > a.trunc_order:
        raise UnknownCoefficientError(
            f"the coefficient of order {k} lies beyond the truncation "
            f"order {a.trunc_order}."
        )
    if k < a.min_order:
        return 0j
    return a.coeffs[k - a.min_order]


def ls_residue(a: LaurentSeries) -> complex:
    return ls_coeff(a, -1)


def monomial(
    center: complex, order: int, trunc_order: int, coeff: complex = 1
) -> LaurentSeries:
    """`coeff * (s - center)**order`, known exactly up to `trunc_order`."""
    if trunc_order < order:
        return LaurentSeries(center, order, ())
    zeros = (0j,) * (trunc_order - order)
    return LaurentSeries(center, order, (complex(coeff), *zeros))


def pole_shift_binomial(q: int, a: complex, terms: int) -> LaurentSeries:
    """
    The Taylor expansion of `s**-q` around `a != 0`.

        s**-q = sum_{k>=0} C(k+q-1, q-1) (-1)**k a**(-q-k) (s - a)**k

    Parameters
    ----------
    q
        A positive integer.
    a
        The nonzero center.
    terms
        The number of Taylor coefficients kept.

    Returns
    -------
    LaurentSeries
        Centered at `a`, with orders `0..terms-1`.

    Examples
    -------
    ```{python}
    import eulersum as es

    es.pole_shift_binomial(2, -1, 3).coeffs
    ```
    """
    if a == 0:
        raise DomainError("`a` must be nonzero.")
    if q < 1:
        raise DomainError("`q` must be a positive integer.")
    a = complex(a)
    coeffs: Sequence[complex] = [
        comb(k + q - 1, q - 1) * (-1) ** k * a ** (-q - k)
        for k in range(terms)
    ]
    return LaurentSeries(a, 0, tuple(coeffs))
