from __future__ import annotations

import cmath
import logging
import math
from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache

import mpmath
import numpy as np

from .._errors import ConvergenceError, DivergenceError, DomainError
from ..numerics.accel import aitken_iterated, levin_u
from ..numerics.config import AccelMode, EvalConfig
from ..numerics.params import (
    RootOfUnity,
    UnitParam,
    as_param,
    canonical,
    root_of_unity,
    snap_to_root,
)
from ..numerics.summation import compensated_sum, running_sum
from ..numerics.values import ValueWithError
from .memo import MEMO, config_tag

__all__ = [
    "LI0_PAIR",
    "PolylogKey",
    "bar_zeta",
    "eta",
    "finite_polylog_sum",
    "hurwitz_zeta",
    "polylog",
    "polylog_batch",
    "powers_at",
    "reflected_finite_sum",
    "shifted_tail",
    "unit_powers",
    "zeta",
]

logger = logging.getLogger(__name__)

# the convention Li_0(x) + Li_0(1/x) := -1; Li_0 alone is never defined
LI0_PAIR = -1.0

# relative size of the first omitted Euler-Maclaurin correction
_EM_REL = 1e-17

# rounding allowance for closed forms and Hurwitz decompositions
_ROUNDING = 4e-16


@lru_cache(maxsize=None)
def _bernoulli_2k(k: int) -> float:
    return float(mpmath.bernoulli(2 * k))


@dataclass(frozen=True)
class PolylogKey:
    """A weight and an argument of `Li_p(x)`, with `(p, x) != (1, 1)`."""

    p: int
    x: UnitParam

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", as_param(self.x))
        if self.p < 1:
            raise DomainError("`p` must be a positive integer.")
        if self.p == 1 and self.x.is_one():
            raise DivergenceError("Li_p(x) diverges at (p,x)=(1,1).")

    @property
    def canonical(self) -> str:
        return f"Li|{self.p}|{canonical(self.x)}"


def _root_table(root: RootOfUnity) -> np.ndarray:
    return np.array(
        [root_of_unity(j, root.order).value for j in range(root.order)]
    )


def unit_powers(x: UnitParam, start: int, count: int) -> np.ndarray:
    """The powers `x**k` for `k = start, ..., start + count - 1`."""
    return powers_at(x, np.arange(start, start + count))


def powers_at(x: UnitParam, k: np.ndarray) -> np.ndarray:
    """
    The powers `x**k` for an integer array `k`.

    Roots of unity are read from a table of exact residues, so the powers do
    not drift with `k`. Negative exponents are allowed on the unit circle.
    """
    k = np.asarray(k, dtype=np.int64)
    if (root := snap_to_root(x)) is not None:
        return _root_table(root)[(root.numer * k) % root.order]
    z = complex(x.value)
    if z == 0 and k.size and k.min() < 0:
        raise DomainError("`x` must be nonzero for negative powers.")
    return np.power(z, k.astype(float))


def finite_polylog_sum(n: int, p: int, x: UnitParam) -> complex:
    """
    The partial sum `zeta_n(p; x) = sum_{k=1}^{n} x**k / k**p`.

    Parameters
    ----------
    n
        Number of terms; `n = 0` gives the empty sum.
    p
        The weight.
    x
        The argument.

    Returns
    -------
    complex
        The correctly rounded partial sum.

    Examples
    -------
    ```{python}
    import eulersum as es

    es.finite_polylog_sum(3, 1, es.as_param(1))
    ```
    """
    if n < 0:
        raise DomainError("`n` must be nonnegative.")
    if n == 0:
        return 0j
    x = as_param(x)
    k = np.arange(1, n + 1, dtype=float)
    return compensated_sum(unit_powers(x, 1, n) / k**p)


def reflected_finite_sum(n: int, p: int, x: UnitParam) -> complex:
    """`x**n * zeta_n(p; 1/x)`, summed as `sum_{k<=n} x**(n-k) / k**p`."""
    if n < 0:
        raise DomainError("`n` must be nonnegative.")
    if n == 0:
        return 0j
    x = as_param(x)
    k = np.arange(1, n + 1, dtype=float)
    return compensated_sum(unit_powers(x, 0, n)[::-1] / k**p)


def _em_head_length(p: int, a: float, em_terms: int) -> int:
    # smallest b = head + a at which the first omitted correction,
    # relative to the tail integral b**(1-p)/(p-1), falls below _EM_REL
    k = em_terms + 1
    log_coef = (
        math.log(abs(_bernoulli_2k(k)))
        - math.lgamma(2 * k + 1)
        + math.lgamma(p + 2 * k - 1)
        - math.lgamma(p)
        + math.log(p - 1)
    )
    b_min = math.exp((log_coef - math.log(_EM_REL)) / (2 * k))
    return max(1, math.ceil(b_min - a))


def _hurwitz(p: int, a: float, em_terms: int = 8) -> float:
    # sum_{m>=0} (m + a)**-p for p >= 2 and any a > 0
    head = _em_head_length(p, a, em_terms)
    m = np.arange(head, dtype=float) + a
    head_sum = math.fsum(m**-p)
    b = head + a
    tail = [b ** (1 - p) / (p - 1), 0.5 * b**-p]
    rising, fact = float(p), 2.0
    for k in range(1, em_terms + 1):
        tail.append(_bernoulli_2k(k) / fact * rising * b ** (-p - 2 * k + 1))
        rising *= (p + 2 * k - 1) * (p + 2 * k)
        fact *= (2 * k + 1) * (2 * k + 2)
    return head_sum + math.fsum(tail)


def hurwitz_zeta(p: int, a: float, cfg: EvalConfig | None = None) -> float:
    """
    The Hurwitz zeta function `sum_{m>=0} 1/(m + a)**p`.

    A direct head is followed by an Euler-Maclaurin tail of order
    `cfg.hurwitz_em_terms`; the head is long enough that the first omitted
    correction is negligible in double precision.

    Parameters
    ----------
    p
        An integer weight, at least 2.
    a
        The shift, `0 < a <= 1`.
    cfg
        Supplies the Euler-Maclaurin order; defaults to `EvalConfig()`.

    Returns
    -------
    float
        The value of the series.

    Examples
    -------
    ```{python}
    import eulersum as es

    es.hurwitz_zeta(2, 1.0), es.hurwitz_zeta(2, 0.5)
    ```
    """
    cfg = cfg or EvalConfig()
    if p < 2:
        raise DomainError("`p` must be at least 2.")
    if not 0 < a <= 1:
        raise DomainError("`a` must satisfy 0 < a <= 1.")
    return _hurwitz(p, a, cfg.hurwitz_em_terms)


def _hurwitz_terms(p: int, root: RootOfUnity, em: int) -> list[complex]:
    n = root.order
    return [
        root.power(j).value * _hurwitz(p, j / n, em) / n**p
        for j in range(1, n + 1)
    ]


def _polylog_root(p: int, root: RootOfUnity, em: int) -> ValueWithError:
    if root.is_one():
        value = complex(_hurwitz(p, 1.0, em))
        return ValueWithError(value, _ROUNDING * abs(value), terms_used=1)
    terms = _hurwitz_terms(p, root, em)
    value = compensated_sum(terms)
    err = _ROUNDING * (1 + sum(abs(t) for t in terms))
    return ValueWithError(value, err, terms_used=root.order)


def _geometric_length(r: float, p: int, tol: float, start: int = 1) -> int:
    # terms needed before r**n / (n**p (1 - r)) drops below tol / 10
    if r == 0:
        return 0
    n = math.log(tol * (1 - r) / 10) / math.log(r)
    return max(start, math.ceil(n))


def _accelerated_polylog(
    p: int, z: complex, cfg: EvalConfig, tol: float
) -> ValueWithError:
    if cfg.accel_mode is AccelMode.NONE:
        n = cfg.max_terms
        k = np.arange(1, n + 1, dtype=float)
        value = compensated_sum(np.power(z, k) / k**p)
        # Abel summation: |sum_{k>n} z**k/k**p| <= 2 / (|1 - z| (n+1)**p)
        err = 2 / (abs(1 - z) * (n + 1) ** p)
        estimate = ValueWithError(value, err, terms_used=n)
        if err > tol:
            raise ConvergenceError(
                f"Li_{p}({z}) did not reach `target_tol`={tol!r} "
                f"in {n} terms.",
                estimate,
            )
        return estimate
    err = math.inf
    for n in (16, 32, 64, 128):
        k = np.arange(1, n + 1, dtype=float)
        sums = running_sum(np.power(z, k) / k**p)
        if cfg.accel_mode is AccelMode.AITKEN:
            value, err = aitken_iterated(sums)
        else:
            value, err = levin_u(sums)
        logger.debug("Li_%d(%s): %d terms, err %.2e", p, z, n, err)
        if err <= tol / 10:
            break
    estimate = ValueWithError(value, err, terms_used=n, accelerated=True)
    if err > tol:
        raise ConvergenceError(
            f"Li_{p}({z}) did not reach `target_tol`={tol!r}.", estimate
        )
    return estimate


def _polylog(p: int, x: UnitParam, cfg: EvalConfig) -> ValueWithError:
    boundary = x.on_circle()
    tol = cfg.tol_for(boundary)
    if p == 1:
        value = -cmath.log(1 - x.value)
        return ValueWithError(value, _ROUNDING * (1 + abs(value)))
    if (root := snap_to_root(x)) is not None:
        return _polylog_root(p, root, cfg.hurwitz_em_terms)
    z = complex(x.value)
    if not boundary:
        n = _geometric_length(abs(z), p, tol)
        if n <= cfg.max_terms:
            if n == 0:
                return ValueWithError.exact(0)
            k = np.arange(1, n + 1, dtype=float)
            value = compensated_sum(np.power(z, k) / k**p)
            r = abs(z)
            err = r ** (n + 1) / ((n + 1) ** p * (1 - r))
            return ValueWithError(
                value, err + _ROUNDING * (1 + abs(value)), terms_used=n
            )
    return _accelerated_polylog(p, z, cfg, tol)


def polylog(
    p: int, x: UnitParam | complex, cfg: EvalConfig | None = None
) -> ValueWithError:
    """
    The polylogarithm `Li_p(x) = sum_{n>=1} x**n / n**p` on the closed disk.

    The evaluation path depends on the argument:

    - `p = 1`: the closed form `-log(1 - x)` on the principal branch.
    - an exact root of unity of order `N`: the Hurwitz decomposition
      `N**-p * sum_{j=1}^{N} x**j * hurwitz_zeta(p, j/N)`.
    - an interior point: direct summation up to a geometric tail bound.
    - any other point on (or very near) the circle: partial sums
      accelerated per `cfg.accel_mode`; the result is flagged
      `accelerated`.

    Parameters
    ----------
    p
        A positive integer weight.
    x
        The argument; `(p, x) = (1, 1)` diverges.
    cfg
        Evaluation settings; defaults to `EvalConfig()`.

    Returns
    -------
    ValueWithError
        The value with an absolute error bound below the target tolerance.

    Examples
    -------
    ```{python}
    import eulersum as es

    es.polylog(2, es.as_param(-1))
    ```
    """
    cfg = cfg or EvalConfig()
    key = PolylogKey(p, as_param(x))
    tag = config_tag(cfg, key.x.on_circle())
    return MEMO.get_or_compute(
        f"{key.canonical}|{tag}", lambda: _polylog(key.p, key.x, cfg)
    )


def polylog_batch(
    keys: Iterable[PolylogKey | tuple[int, UnitParam]],
    cfg: EvalConfig | None = None,
) -> dict:
    """
    Evaluate many polylogarithms, memoized.

    A key that fails (divergent or not converged) maps to its exception
    instead of aborting the batch.
    """
    cfg = cfg or EvalConfig()
    out: dict = {}
    for key in keys:
        if key in out:
            continue
        try:
            pk = key if isinstance(key, PolylogKey) else PolylogKey(*key)
            out[key] = polylog(pk.p, pk.x, cfg)
        except (DomainError, ConvergenceError) as exc:
            out[key] = exc
    return out


def shifted_tail(
    n: int, p: int, x: UnitParam, cfg: EvalConfig | None = None
) -> ValueWithError:
    """
    `sum_{i>=0} x**i / (n + i)**p`, i.e. `x**-n (Li_p(x) - zeta_{n-1}(p;x))`.

    Interior arguments are summed directly; roots of unity go through Hurwitz
    zeta values at `(n + j)/N`, which avoids the cancellation of the
    difference form.
    """
    cfg = cfg or EvalConfig()
    x = as_param(x)
    if n < 1:
        raise DomainError("`n` must be a positive integer.")
    if p == 1 and x.is_one():
        raise DivergenceError("the tail diverges at (p,x)=(1,1).")
    if not x.on_circle():
        r = abs(x.value)
        length = _geometric_length(r, p, cfg.tol_for(False)) + 1
        i = np.arange(length, dtype=float)
        value = compensated_sum(unit_powers(x, 0, length) / (n + i) ** p)
        err = r**length / ((n + length) ** p * (1 - r))
        return ValueWithError(value, err + _ROUNDING, terms_used=length)
    root = snap_to_root(x)
    if root is not None and p >= 2:
        order, em = root.order, cfg.hurwitz_em_terms
        terms = [
            root.power(j).value * _hurwitz(p, (n + j) / order, em) / order**p
            for j in range(order)
        ]
        err = _ROUNDING * sum(abs(t) for t in terms)
        return ValueWithError(compensated_sum(terms), err, terms_used=order)
    li = polylog(p, x, cfg)
    head = finite_polylog_sum(n - 1, p, x)
    scale = complex(x.value) ** -n
    return (li - head) * scale


def zeta(p: int, cfg: EvalConfig | None = None) -> ValueWithError:
    """The Riemann zeta value `zeta(p) = Li_p(1)`, `p >= 2`."""
    return polylog(p, root_of_unity(0, 1), cfg)


def bar_zeta(k: int, cfg: EvalConfig | None = None) -> ValueWithError:
    """The barred single index `zeta(k-bar) = Li_k(-1)`."""
    return polylog(k, root_of_unity(1, 2), cfg)


def eta(p: int, cfg: EvalConfig | None = None) -> ValueWithError:
    """The alternating zeta `eta(p) = -Li_p(-1)`; `eta(1) = log 2`."""
    return -bar_zeta(p, cfg)

