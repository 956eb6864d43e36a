"""
Multiple polylogarithms.

The nested sum runs over `0 < n_1 < ... < n_r` and the convergence weight
sits on the LAST index:

    Li_{k_1..k_r}(x_1..x_r) = sum prod_j x_j**n_j / n_j**k_j

so `Li_{1,2}(x, 1)` converges while `Li_{2,1}(x, 1)` does not. Part of the
literature uses the reversed order.
"""

from __future__ import annotations

import logging
import math
import re
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .._errors import ConvergenceError, DivergenceError, DomainError
from ..numerics.accel import extrapolate, plan_samples
from ..numerics.config import AccelMode, EvalConfig
from ..numerics.params import (
    UNIT_TOL,
    UnitParam,
    as_param,
    canonical,
    common_period,
    root_of_unity,
    snap_to_root,
)
from ..numerics.summation import compensated_sum, running_sum
from ..numerics.values import ValueWithError
from .memo import MEMO, config_tag
from .polylog import polylog, unit_powers

__all__ = [
    "MplSpec",
    "amzv_eval",
    "brute_force_mpl",
    "mpl_eval",
    "nested_partial_sums",
    "parse_amzv",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MplSpec:
    """
    The indices and arguments of `Li_{k_1..k_r}(x_1..x_r)`.

    A spec converges when `|x_j ... x_r| < 1` for every `j` (the interior
    case) or when every argument is a root of unity and
    `(k_r, x_r) != (1, 1)`. Other mixes of interior and boundary arguments
    are rejected.
    """

    k: tuple[int, ...]
    x: tuple[UnitParam, ...]

    def __post_init__(self) -> None:
        k = tuple(int(kj) for kj in self.k)
        x = tuple(as_param(xj) for xj in self.x)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "x", x)
        if not k:
            raise DomainError("`k` must not be empty.")
        if len(k) != len(x):
            raise DomainError("`k` and `x` must have the same length.")
        if any(kj < 1 for kj in k):
            raise DomainError("`k` must hold positive integers.")
        if k[-1] == 1 and x[-1].is_one():
            raise DivergenceError(
                "Li_k(x) diverges at (k_r,x_r)=(1,1)."
            )
        if not (self.is_interior or self.is_cyclotomic):
            raise DomainError(
                "`x` mixes boundary and interior arguments; either "
                "|x_j...x_r| < 1 for all j or all x_j roots of unity."
            )

    @property
    def depth(self) -> int:
        return len(self.k)

    @property
    def weight(self) -> int:
        return sum(self.k)

    @property
    def is_interior(self) -> bool:
        prod = 1 + 0j
        for xj in reversed(self.x):
            prod *= xj.value
            if abs(prod) >= 1 - UNIT_TOL:
                return False
        return True

    @property
    def is_cyclotomic(self) -> bool:
        return all(snap_to_root(xj) is not None for xj in self.x)

    @property
    def canonical(self) -> str:
        ks = ",".join(map(str, self.k))
        xs = ",".join(canonical(xj) for xj in self.x)
        return f"MPL|{ks}|{xs}"

    def conjugate(self) -> MplSpec:
        return MplSpec(
            self.k, tuple(as_param(xj.value.conjugate()) for xj in self.x)
        )

    def __str__(self) -> str:
        ks = ",".join(map(str, self.k))
        xs = ",".join(canonical(xj) for xj in self.x)
        return f"Li_{{{ks}}}({xs})"


def nested_partial_sums(
    spec: MplSpec, n: int, inner_limit: complex | None = None
) -> np.ndarray:
    """
    The partial sums `A_r(m)` for `m = 1..n` of the nested series.

    `A_1(m) = sum_{i<=m} x_1**i/i**k_1` and
    `A_j(m) = sum_{i<=m} (x_j**i/i**k_j) A_{j-1}(i-1)`, each a compensated
    running sum, so the cost is `O(r n)`. With `inner_limit` the last level
    sums `A_{r-1}(i-1) - inner_limit` in place of `A_{r-1}(i-1)`.
    """
    idx = np.arange(1, n + 1, dtype=float)
    acc: np.ndarray | None = None
    for j, (kj, xj) in enumerate(zip(spec.k, spec.x), start=1):
        terms = unit_powers(xj, 1, n) / idx**kj
        if acc is not None:
            # A_{j-1}(i-1): shift right, A_{j-1}(0) = 0
            inner = np.concatenate(([0j], acc[:-1]))
            if inner_limit is not None and j == spec.depth:
                inner = inner - inner_limit
            terms = terms * inner
        acc = running_sum(terms)
    assert acc is not None
    return acc


def _interior_tail(spec: MplSpec, n: int) -> float:
    # the geometric tail past n terms times the growth of the inner sums
    r = abs(spec.x[-1].value)
    return r**n * (1 + math.log(max(n, 1))) ** (spec.depth - 1) / (1 - r)


def _interior_length(spec: MplSpec, tol: float) -> int:
    r = abs(spec.x[-1].value)
    if r == 0:
        return spec.depth
    n = max(spec.depth, math.ceil(math.log(tol * (1 - r) / 10) / math.log(r)))
    while _interior_tail(spec, n) > tol / 10:
        n = math.ceil(n * 1.2) + 1
    return n


def _mpl_interior(spec: MplSpec, cfg: EvalConfig) -> ValueWithError:
    tol = cfg.tol_for(False)
    n = _interior_length(spec, tol)
    err = _interior_tail(spec, n)
    if n > cfg.max_terms:
        m = cfg.max_terms
        raise ConvergenceError(
            f"{spec} needs {n} terms, above `max_terms`={m}.",
            ValueWithError(
                nested_partial_sums(spec, m)[-1], _interior_tail(spec, m), m
            ),
        )
    value = complex(nested_partial_sums(spec, n)[-1])
    return ValueWithError(value, err + 1e-15 * (1 + abs(value)), n)


def _log_degree(spec: MplSpec) -> int:
    inner = zip(spec.k[:-1], spec.x[:-1])
    return sum(1 for kj, xj in inner if kj == 1 and xj.is_one())


def _accel_mode(spec: MplSpec, cfg: EvalConfig) -> AccelMode:
    # k_r = 1 on the circle converges only conditionally
    if spec.k[-1] == 1 and cfg.accel_mode is AccelMode.NONE:
        logger.debug("%s: k_r=1, extrapolating despite `accel_mode`", spec)
        return AccelMode.RICHARDSON
    return cfg.accel_mode


def _split_head(
    spec: MplSpec, cfg: EvalConfig
) -> tuple[complex | None, ValueWithError | None]:
    # A_{r-1}(m-1) = L + (A_{r-1}(m-1) - L), L the inner value
    if spec.k[-2] == 1 and spec.x[-2].is_one():
        return None, None
    inner = mpl_eval(MplSpec(spec.k[:-1], spec.x[:-1]), cfg)
    held = ValueWithError.exact(inner.value)
    return inner.value, held * polylog(spec.k[-1], spec.x[-1], cfg)


def _mpl_cyclotomic(spec: MplSpec, cfg: EvalConfig) -> ValueWithError:
    tol = cfg.tol_for(True)
    mode = _accel_mode(spec, cfg)
    period = common_period(spec.x) or 1
    log_degree = _log_degree(spec)
    ks = plan_samples(period, log_degree, cfg.max_terms)
    limit, head = _split_head(spec, cfg)
    sums = nested_partial_sums(spec, ks[-1], limit)
    sampled = [complex(sums[k - 1]) for k in ks]
    value, err = extrapolate(ks, sampled, mode, log_degree)
    logger.debug(
        "%s: period %d, up to %d terms, err %.2e", spec, period, ks[-1], err
    )
    estimate = ValueWithError(
        value,
        err,
        terms_used=ks[-1],
        accelerated=mode is not AccelMode.NONE,
    )
    if head is not None:
        estimate = head + estimate
    if estimate.abs_err > tol:
        raise ConvergenceError(
            f"{spec} did not reach `target_tol`={tol!r}.", estimate
        )
    return estimate


def _mpl_eval(spec: MplSpec, cfg: EvalConfig) -> ValueWithError:
    if spec.depth == 1:
        return polylog(spec.k[0], spec.x[0], cfg)
    if spec.is_interior:
        return _mpl_interior(spec, cfg)
    return _mpl_cyclotomic(spec, cfg)


def mpl_eval(spec: MplSpec, cfg: EvalConfig | None = None) -> ValueWithError:
    """
    Evaluate a multiple polylogarithm.

    Depth one is `polylog()`. Deeper interior specs are truncated once the
    geometric tail (times the logarithmic growth of the inner sums) is below
    the tolerance. At roots of unity the inner value
    `L = Li_{k_1..k_{r-1}}(x_1..x_{r-1})` is split off, unless
    `(k_{r-1}, x_{r-1}) = (1, 1)`, leaving `L Li_{k_r}(x_r)` plus a faster
    decaying remainder. The remainder is summed in whole periods of the
    arguments and extrapolated per `cfg.accel_mode`, or by Richardson
    extrapolation when `k_r = 1` and the mode is `AccelMode.NONE`.

    Parameters
    ----------
    spec
        The indices and arguments.
    cfg
        Evaluation settings; defaults to `EvalConfig()`.

    Returns
    -------
    ValueWithError
        The value with an absolute error bound.

    Examples
    -------
    ```{python}
    import eulersum as es

    half = es.as_param(0.5)
    es.mpl_eval(es.MplSpec((1, 1), (half, half)))
    ```
    """
    cfg = cfg or EvalConfig()
    boundary = not spec.is_interior
    key = f"{spec.canonical}|{config_tag(cfg, boundary)}"
    return MEMO.get_or_compute(key, lambda: _mpl_eval(spec, cfg))


def _nested_sum(terms: Sequence[np.ndarray], upper: int) -> complex:
    # sum over 0 <= i_1 < ... < i_r < upper of prod terms[j][i_j]
    depth = len(terms)
    if depth == 1:
        return compensated_sum(terms[0][:upper])
    if depth == 2:
        grid = np.outer(terms[0][:upper], terms[1][:upper])
        return compensated_sum(grid[np.triu_indices(upper, 1)])
    return compensated_sum(
        [
            terms[-1][m] * _nested_sum(terms[:-1], m)
            for m in range(depth - 1, upper)
        ]
    )


def brute_force_mpl(spec: MplSpec, N: int) -> complex:
    """
    The literal nested sum over `0 < n_1 < ... < n_r <= N`.

    The cost grows like `N**r`; keep `r <= 3`.
    """
    if N < spec.depth:
        raise DomainError("`N` must be at least the depth of `spec`.")
    idx = np.arange(1, N + 1, dtype=float)
    terms = [
        unit_powers(xj, 1, N) / idx**kj for kj, xj in zip(spec.k, spec.x)
    ]
    return _nested_sum(terms, N)


_INDEX_RE = re.compile(r"^(bar)?(\d+)(-)?$")


def parse_amzv(text: str) -> MplSpec:
    """
    Parse the bar notation of alternating multiple zeta values.

    A barred index has argument -1; both `bar3` and `3-` are accepted.

    Examples
    -------
    ```{python}
    import eulersum as es

    es.parse_amzv("bar3,2,bar1,4")
    ```
    """
    k: list[int] = []
    x: list[UnitParam] = []
    for token in text.split(","):
        m = _INDEX_RE.match(token.strip())
        if m is None or (m.group(1) and m.group(3)) or int(m.group(2)) < 1:
            raise DomainError(
                f"`{token.strip()}` is not an index; expected INT, "
                "barINT or INT-."
            )
        k.append(int(m.group(2)))
        barred = bool(m.group(1) or m.group(3))
        x.append(root_of_unity(1 if barred else 0, 2))
    return MplSpec(tuple(k), tuple(x))


def amzv_eval(text: str, cfg: EvalConfig | None = None) -> ValueWithError:
    """`mpl_eval(parse_amzv(text), cfg)`."""
    return mpl_eval(parse_amzv(text), cfg)
