"""
Local expansions of the kernel factors at the integers.

Every `phi` factor enters a kernel through its normalized derivative

    psi_p(s; x) = (-1)**(p-1) phi^(p-1)(s; x) / (p-1)!,
    phi(s; x) = sum_{k>=0} x**k / (k + s),

which has a pole of order `p` at each `s = -n` and is analytic at `s = n`.
`Phi(s; x) = phi(s; x) - phi(-s; 1/x) - 1/s` (`x` a root of unity) has a
simple pole at every integer; at `x = 1` it is `pi*cot(pi*s)` and at
`x = -1` it is `pi*csc(pi*s)`.

The coefficient builders take an array of centers and return one row per
center, so a residue sweep over `n = 1..n_max` costs a handful of vector
operations per factor. `HarmonicTable` holds the running sums they read.
"""

from __future__ import annotations

import logging
from math import comb

import numpy as np

from .._errors import DomainError
from ..numerics.config import EvalConfig
from ..numerics.params import (
    RootOfUnity,
    UnitParam,
    as_param,
    param_inverse,
    snap_to_root,
)
from ..numerics.summation import running_sum
from ..series.polylog import polylog, powers_at, shifted_tail, unit_powers
from .laurent import LaurentSeries

__all__ = [
    "HarmonicTable",
    "big_phi_coefficients",
    "big_phi_expansion",
    "phi_expansion_neg",
    "phi_expansion_pos",
    "phi_neg_coefficients",
    "phi_pos_coefficients",
    "shift_coefficients",
]

logger = logging.getLogger(__name__)


class HarmonicTable:
    """
    Running sums of one argument `x`, indexed by `n = 0..n_max`.

    For each weight `m` the table builds, on first use,

    - `zeta(m)[n]` = `zeta_n(m; x)`,
    - `reflected(m)[n]` = `x**n zeta_n(m; 1/x)` = `sum_{k<=n} x**(n-k)/k**m`,
    - `tail(m)[n]` = `sum_{i>=0} x**i/(n+i)**m` for `n >= 1`.

    On the unit circle the arrays come from compensated prefix sums. Inside
    the disk the reflected sums use the forward recurrence
    `R_n = x R_{n-1} + n**-m` and the tails the backward recurrence
    `T_n = n**-m + x T_{n+1}`, both of which damp rounding errors.
    """

    def __init__(
        self, x: UnitParam, n_max: int, cfg: EvalConfig | None = None
    ) -> None:
        if n_max < 0:
            raise DomainError("`n_max` must be nonnegative.")
        self.x = as_param(x)
        self.n_max = n_max
        self.cfg = cfg or EvalConfig()
        self._zeta: dict[int, np.ndarray] = {}
        self._reflected: dict[int, np.ndarray] = {}
        self._tail: dict[int, np.ndarray] = {}
        self._li: dict[int, complex] = {}
        self._idx = np.arange(1, n_max + 1, dtype=float)

    def covers(self, n_max: int) -> bool:
        return n_max <= self.n_max

    def li(self, m: int) -> complex:
        if m not in self._li:
            self._li[m] = polylog(m, self.x, self.cfg).value
        return self._li[m]

    def zeta(self, m: int) -> np.ndarray:
        if m not in self._zeta:
            terms = unit_powers(self.x, 1, self.n_max) / self._idx**m
            self._zeta[m] = np.concatenate(([0j], running_sum(terms)))
        return self._zeta[m]

    def reflected(self, m: int) -> np.ndarray:
        if m in self._reflected:
            return self._reflected[m]
        if self.x.on_circle():
            inverse = param_inverse(self.x)
            terms = unit_powers(inverse, 1, self.n_max) / self._idx**m
            sums = np.concatenate(([0j], running_sum(terms)))
            out = unit_powers(self.x, 0, self.n_max + 1) * sums
        else:
            z = complex(self.x.value)
            out = np.zeros(self.n_max + 1, dtype=np.complex128)
            acc = 0j
            for n in range(1, self.n_max + 1):
                acc = z * acc + n**-m
                out[n] = acc
        self._reflected[m] = out
        return out

    def tail(self, m: int) -> np.ndarray:
        if m in self._tail:
            return self._tail[m]
        out = np.full(self.n_max + 1, np.nan, dtype=np.complex128)
        if self.n_max == 0:
            self._tail[m] = out
            return out
        if self.x.on_circle():
            head = self.zeta(m)[:-1]
            scale = powers_at(self.x, -np.arange(1, self.n_max + 1))
            out[1:] = scale * (self.li(m) - head)
        else:
            z = complex(self.x.value)
            acc = shifted_tail(self.n_max, m, self.x, self.cfg).value
            out[self.n_max] = acc
            for n in range(self.n_max - 1, 0, -1):
                acc = n**-m + z * acc
                out[n] = acc
        self._tail[m] = out
        return out


def _table_for(
    x: UnitParam,
    ns: np.ndarray,
    cfg: EvalConfig | None,
    table: HarmonicTable | None,
) -> HarmonicTable:
    n_max = int(np.max(np.abs(ns))) if ns.size else 0
    if table is not None:
        if table.x != x or not table.covers(n_max):
            raise DomainError(
                f"`table` must be built for {x} up to n={n_max}."
            )
        return table
    return HarmonicTable(x, n_max, cfg)


def _binomials(p: int, terms: int) -> np.ndarray:
    return np.array([comb(k + p - 1, p - 1) for k in range(terms)], float)


def phi_neg_coefficients(
    ns: np.ndarray,
    p: int,
    x: UnitParam,
    terms: int,
    cfg: EvalConfig | None = None,
    table: HarmonicTable | None = None,
) -> np.ndarray:
    """
    Rows of `psi_p(s; x)` around `s = -n`, orders `-p .. terms-1`.

    Column 0 is the principal coefficient `x**n`; columns `p + k` hold

        C(k+p-1, p-1) ((-1)**k x**n Li_{k+p}(x) + (-1)**p R_n(k+p; x))

    with `R_n` the reflected sum.
    """
    x = as_param(x)
    ns = np.asarray(ns, dtype=np.int64)
    tbl = _table_for(x, ns, cfg, table)
    xn = powers_at(x, ns)
    out = np.zeros((ns.size, p + terms), dtype=np.complex128)
    out[:, 0] = xn
    for k, c in enumerate(_binomials(p, terms)):
        m = k + p
        li = tbl.li(m)
        out[:, p + k] = c * (
            (-1) ** k * xn * li + (-1) ** p * tbl.reflected(m)[ns]
        )
    return out


def phi_pos_coefficients(
    ns: np.ndarray,
    p: int,
    x: UnitParam,
    terms: int,
    cfg: EvalConfig | None = None,
    table: HarmonicTable | None = None,
) -> np.ndarray:
    """Rows of `psi_p(s; x)` around `s = n >= 1`, orders `0 .. terms-1`."""
    x = as_param(x)
    ns = np.asarray(ns, dtype=np.int64)
    if ns.size and ns.min() < 1:
        raise DomainError("`n` must be a positive integer.")
    tbl = _table_for(x, ns, cfg, table)
    out = np.zeros((ns.size, terms), dtype=np.complex128)
    for k, c in enumerate(_binomials(p, terms)):
        out[:, k] = c * (-1) ** k * tbl.tail(k + p)[ns]
    return out


def _big_phi_pairs(
    root: RootOfUnity, terms: int, cfg: EvalConfig | None
) -> np.ndarray:
    # (-1)**m Li_{m+1}(x) - Li_{m+1}(1/x); the m = 0 pair at x = 1 is 0
    out = np.zeros(terms, dtype=np.complex128)
    inverse = root.inverse()
    for m in range(terms):
        if m == 0 and root.is_one():
            continue
        out[m] = (-1) ** m * polylog(m + 1, root, cfg).value
        out[m] -= polylog(m + 1, inverse, cfg).value
    return out


def big_phi_coefficients(
    ns: np.ndarray,
    x: UnitParam,
    terms: int,
    cfg: EvalConfig | None = None,
) -> np.ndarray:
    """Rows of `Phi(s; x)` around `s = n`, orders `-1 .. terms-1`."""
    root = snap_to_root(as_param(x))
    if root is None:
        raise DomainError(f"`x` must be a root of unity, got {x}.")
    ns = np.asarray(ns, dtype=np.int64)
    scale = powers_at(root, -ns)
    row = np.concatenate(([1 + 0j], _big_phi_pairs(root, terms, cfg)))
    return scale[:, None] * row[None, :]


def shift_coefficients(ns: np.ndarray, q: int, terms: int) -> np.ndarray:
    """Rows of `s**-q` around `s = n != 0`, orders `0 .. terms-1`."""
    ns = np.asarray(ns, dtype=float)
    if ns.size and np.any(ns == 0):
        raise DomainError("`n` must be nonzero.")
    out = np.zeros((ns.size, terms), dtype=np.complex128)
    for k, c in enumerate(_binomials(q, terms)):
        out[:, k] = c * (-1) ** k * ns ** (-q - k)
    return out


def phi_expansion_neg(
    n: int,
    p: int,
    x: UnitParam,
    terms: int,
    cfg: EvalConfig | None = None,
    table: HarmonicTable | None = None,
) -> LaurentSeries:
    """
    Expand `(-1)**(p-1) phi^(p-1)(s; x) / (p-1)!` around `s = -n`.

    Parameters
    ----------
    n
        A nonnegative integer.
    p
        The derivative order plus one.
    x
        The argument. `x = 1` needs `p >= 2`.
    terms
        The number of Taylor coefficients kept after the principal part.
    cfg
        Evaluation settings for the polylogarithms.
    table
        Optional running sums of `x` covering `n`.

    Returns
    -------
    LaurentSeries
        Orders `-p .. terms-1`; the principal coefficient is `x**n`.

    Examples
    -------
    ```{python}
    import eulersum as es

    es.phi_expansion_neg(0, 1, es.as_param(-1), 2).coeffs
    ```
    """
    if n < 0:
        raise DomainError("`n` must be nonnegative.")
    if p < 1:
        raise DomainError("`p` must be a positive integer.")
    row = phi_neg_coefficients(np.array([n]), p, x, terms, cfg, table)[0]
    return LaurentSeries(-n, -p, tuple(row))


def phi_expansion_pos(
    n: int,
    p: int,
    x: UnitParam,
    terms: int,
    cfg: EvalConfig | None = None,
    table: HarmonicTable | None = None,
) -> LaurentSeries:
    """
    Taylor expansion of the normalized derivative around `s = n >= 1`.

    Coefficient `k` is `C(k+p-1, p-1) (-1)**k x**-n (Li_{k+p}(x) -
    zeta_{n-1}(k+p; x))`, read from shifted tails.
    """
    if p < 1:
        raise DomainError("`p` must be a positive integer.")
    row = phi_pos_coefficients(np.array([n]), p, x, terms, cfg, table)[0]
    return LaurentSeries(n, 0, tuple(row))


def big_phi_expansion(
    n: int, x: UnitParam, terms: int, cfg: EvalConfig | None = None
) -> LaurentSeries:
    """
    Expand `Phi(s; x)` around the integer `n`.

        Phi(s; x) = x**-n (1/(s-n)
                    + sum_m ((-1)**m Li_{m+1}(x) - Li_{m+1}(1/x)) (s-n)**m)

    At `x = 1` the constant pair is set to 0, which reproduces
    `pi*cot(pi*s) = 1/(s-n) - 2 sum zeta(2k) (s-n)**(2k-1)`.

    Examples
    -------
    ```{python}
    import eulersum as es

    es.big_phi_expansion(0, es.as_param(1), 4).coeffs
    ```
    """
    row = big_phi_coefficients(np.array([n]), x, terms, cfg)[0]
    return LaurentSeries(n, -1, tuple(row))
