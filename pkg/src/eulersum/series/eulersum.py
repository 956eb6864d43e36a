from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from .._errors import ConvergenceError, DivergenceError, DomainError
from ..numerics.accel import extrapolate, levin_u, plan_samples
from ..numerics.config import AccelMode, EvalConfig
from ..numerics.params import (
    UNIT_TOL,
    UnitParam,
    as_param,
    canonical,
    common_period,
    param_product,
)
from ..numerics.summation import running_sum
from ..numerics.values import ValueWithError
from .memo import MEMO, config_tag
from .mpl import MplSpec, mpl_eval
from .polylog import polylog, unit_powers

__all__ = [
    "EulerSumSpec",
    "MplTerm",
    "euler_partial_sums",
    "euler_sum_as_mpls",
    "euler_sum_eval",
    "evaluate_terms",
    "quadratic_to_mpl_chain",
    "stuffle_linear",
    "stuffle_quadratic",
]

logger = logging.getLogger(__name__)

# below this size a geometric component no longer disturbs extrapolation
_GEOMETRIC_FLOOR = 1e-16


@dataclass(frozen=True)
class EulerSumSpec:
    """
    The generalized Euler sum

        S_{p_1..p_k;q}(x_1..x_k; x) = sum_n zeta_n(p_1;x_1)...zeta_n(p_k;x_k)
                                      * x**n / n**q

    The `(p_j, x_j)` pairs form a multiset: the order they are given in does
    not change the value, and `pairs` lists them sorted.
    """

    p: tuple[int, ...]
    q: int
    args: tuple[UnitParam, ...]
    outer: UnitParam

    def __post_init__(self) -> None:
        p = tuple(int(pj) for pj in self.p)
        args = tuple(as_param(xj) for xj in self.args)
        outer = as_param(self.outer)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "args", args)
        object.__setattr__(self, "outer", outer)
        if len(p) != len(args):
            raise DomainError("`p` and `args` must have the same length.")
        if any(pj < 1 for pj in p) or self.q < 1:
            raise DomainError("`p` and `q` must be positive integers.")
        if abs(param_product([*args, outer]).value) > 1 + UNIT_TOL:
            raise DomainError("`args` and `outer` need |x_1...x_k x| <= 1.")
        if self.q == 1 and outer.is_one():
            raise DivergenceError("the Euler sum diverges at (q,x)=(1,1).")

    @property
    def order(self) -> int:
        return len(self.p)

    @property
    def weight(self) -> int:
        return sum(self.p) + self.q

    @property
    def pairs(self) -> tuple[tuple[int, UnitParam], ...]:
        return tuple(
            sorted(
                zip(self.p, self.args),
                key=lambda pair: (pair[0], canonical(pair[1])),
            )
        )

    @property
    def canonical(self) -> str:
        inner = ",".join(f"{pj}:{canonical(xj)}" for pj, xj in self.pairs)
        return f"S|{inner}|{self.q}|{canonical(self.outer)}"

    def conjugate(self) -> EulerSumSpec:
        def conj(x: UnitParam) -> UnitParam:
            return as_param(x.value.conjugate())

        return EulerSumSpec(
            self.p,
            self.q,
            tuple(conj(xj) for xj in self.args),
            conj(self.outer),
        )

    def __str__(self) -> str:
        ps = ",".join(str(pj) for pj, _ in self.pairs)
        xs = ",".join(canonical(xj) for _, xj in self.pairs)
        return f"S_{{{ps};{self.q}}}({xs};{canonical(self.outer)})"


def euler_partial_sums(
    spec: EulerSumSpec,
    n: int,
    limits: Sequence[complex | None] | None = None,
) -> np.ndarray:
    """
    Partial sums of the Euler series for `1..n` terms, in one pass.

    `limits` runs along `spec.pairs`. The factors with a limit `L_j` enter
    as `prod zeta_n(p_j; x_j) - prod L_j`, which leaves the remainder of the
    series once `prod L_j` times the sum over the other factors is split off.
    """
    idx = np.arange(1, n + 1, dtype=float)
    terms = unit_powers(spec.outer, 1, n) / idx**spec.q
    split, held = np.ones(n, dtype=np.complex128), 1 + 0j
    limits = limits or [None] * spec.order
    for (pj, xj), limit in zip(spec.pairs, limits):
        running = running_sum(unit_powers(xj, 1, n) / idx**pj)
        if limit is None:
            terms = terms * running
        else:
            split, held = split * running, held * limit
    if any(limit is not None for limit in limits):
        terms = terms * (split - held)
    return running_sum(terms)


def _geometric_start(args: Iterable[UnitParam]) -> int:
    # the running zeta_n of interior arguments settle geometrically
    start = 0
    for xj in args:
        r = abs(xj.value)
        if not xj.on_circle() and r > 0:
            settle = math.log(_GEOMETRIC_FLOOR) / math.log(r)
            start = max(start, math.ceil(settle))
    return start


def _euler_interior(spec: EulerSumSpec, cfg: EvalConfig) -> ValueWithError:
    tol = cfg.tol_for(False)
    r = abs(spec.outer.value)
    if r == 0:
        return ValueWithError.exact(0)

    def bound(n: int) -> float:
        return r**n * (1 + math.log(n)) ** spec.order / (1 - r)

    n = max(1, math.ceil(math.log(tol * (1 - r) / 10) / math.log(r)))
    while bound(n) > tol / 10:
        n = math.ceil(n * 1.2) + 1
    if n > cfg.max_terms:
        n = cfg.max_terms
        estimate = ValueWithError(euler_partial_sums(spec, n)[-1], bound(n))
        raise ConvergenceError(
            f"{spec} needs more than `max_terms`={n} terms.", estimate
        )
    value = complex(euler_partial_sums(spec, n)[-1])
    return ValueWithError(value, bound(n) + 1e-15 * (1 + abs(value)), n)


def _accel_mode(spec: EulerSumSpec, cfg: EvalConfig) -> AccelMode:
    # q = 1 on the circle converges only conditionally
    if spec.q == 1 and cfg.accel_mode is AccelMode.NONE:
        logger.debug("%s: q=1, extrapolating despite `accel_mode`", spec)
        return AccelMode.RICHARDSON
    return cfg.accel_mode


def _split_head(
    spec: EulerSumSpec, cfg: EvalConfig
) -> tuple[list[complex | None], ValueWithError | None]:
    # zeta_n(p;x) = Li_p(x) - remainder for every factor but (1,1)
    limits: list[complex | None] = []
    held, kept = ValueWithError.exact(1), []
    for pj, xj in spec.pairs:
        if pj == 1 and xj.is_one():
            limits.append(None)
            kept.append((pj, xj))
            continue
        limit = polylog(pj, xj, cfg)
        limits.append(limit.value)
        held = held * ValueWithError.exact(limit.value)
    if len(kept) == spec.order:
        return limits, None
    rest = EulerSumSpec(
        tuple(pj for pj, _ in kept),
        spec.q,
        tuple(xj for _, xj in kept),
        spec.outer,
    )
    return limits, held * euler_sum_eval(rest, cfg)


def _euler_periodic(
    spec: EulerSumSpec, period: int, cfg: EvalConfig
) -> ValueWithError:
    mode = _accel_mode(spec, cfg)
    log_degree = sum(1 for pj, xj in spec.pairs if pj == 1 and xj.is_one())
    ks = plan_samples(
        period, log_degree, cfg.max_terms, _geometric_start(spec.args)
    )
    limits, head = _split_head(spec, cfg)
    sums = euler_partial_sums(spec, ks[-1], limits)
    sampled = [complex(sums[k - 1]) for k in ks]
    value, err = extrapolate(ks, sampled, mode, log_degree)
    logger.debug(
        "%s: period %d, %d samples up to %d terms, err %.2e",
        spec,
        period,
        len(ks),
        ks[-1],
        err,
    )
    tail = ValueWithError(
        value, err, ks[-1], accelerated=mode is not AccelMode.NONE
    )
    return tail if head is None else head + tail


def _euler_aperiodic(
    spec: EulerSumSpec, cfg: EvalConfig, tol: float
) -> ValueWithError:
    # no period to sample at; Levin whatever `accel_mode` says
    err, n = math.inf, 0
    for n in (32, 64, 128, 256):
        sums = euler_partial_sums(spec, n)
        value, err = levin_u(sums)
        if err <= tol / 10:
            break
    return ValueWithError(value, err, n, accelerated=True)


def _euler_sum_eval(spec: EulerSumSpec, cfg: EvalConfig) -> ValueWithError:
    if spec.order == 0:
        return polylog(spec.q, spec.outer, cfg)
    if not spec.outer.on_circle():
        return _euler_interior(spec, cfg)
    tol = cfg.tol_for(True)
    period = common_period([spec.outer, *spec.args])
    if period is None:
        estimate = _euler_aperiodic(spec, cfg, tol)
    else:
        estimate = _euler_periodic(spec, period, cfg)
    if estimate.abs_err > tol:
        raise ConvergenceError(
            f"{spec} did not reach `target_tol`={tol!r}.", estimate
        )
    return estimate


def euler_sum_eval(
    spec: EulerSumSpec, cfg: EvalConfig | None = None
) -> ValueWithError:
    """
    Evaluate a generalized Euler sum.

    One pass over `n` keeps every running `zeta_n(p_j; x_j)` as a
    compensated prefix sum. An interior outer argument is truncated at a
    geometric tail bound. On the unit circle every factor other than
    `zeta_n(1; 1)` is split into `Li_{p_j}(x_j)` minus its remainder: the
    product of the limits times the sum over the remaining factors is
    evaluated on its own, and only the faster-decaying rest is summed. Its
    partial sums are taken at whole periods of all the roots involved,
    where the tail has an expansion in `K**-a log(K)**b` (`b` up to the
    number of harmonic factors with `(p_j, x_j) = (1, 1)`), and
    extrapolated per `cfg.accel_mode`; sums with `q = 1` are extrapolated
    even under `AccelMode.NONE`. Points on the circle that are not roots of
    unity always go through the Levin transform.

    Parameters
    ----------
    spec
        The sum to evaluate.
    cfg
        Evaluation settings; defaults to `EvalConfig()`.

    Returns
    -------
    ValueWithError
        The value with an absolute error estimate.

    Examples
    -------
    ```{python}
    import eulersum as es

    one = es.as_param(1)
    es.euler_sum_eval(es.EulerSumSpec((1,), 2, (one,), one))
    ```
    """
    cfg = cfg or EvalConfig()
    boundary = spec.outer.on_circle()
    key = f"{spec.canonical}|{config_tag(cfg, boundary)}"
    return MEMO.get_or_compute(key, lambda: _euler_sum_eval(spec, cfg))


@dataclass(frozen=True)
class MplTerm:
    """A coefficient times a product of multiple polylogarithms."""

    coeff: complex
    factors: tuple[MplSpec, ...]

    def evaluate(self, cfg: EvalConfig | None = None) -> ValueWithError:
        value = ValueWithError.exact(self.coeff)
        for factor in self.factors:
            value = value * mpl_eval(factor, cfg)
        return value

    def __str__(self) -> str:
        sign = "-" if self.coeff.real < 0 else "+"
        body = " * ".join(str(f) for f in self.factors)
        mag = abs(self.coeff)
        return f"{sign} {body}" if mag == 1 else f"{sign} {mag:g} * {body}"


def _term(coeff: complex, *factors: tuple[Sequence[int], Sequence]) -> MplTerm:
    return MplTerm(
        complex(coeff),
        tuple(MplSpec(tuple(k), tuple(x)) for k, x in factors),
    )


def evaluate_terms(
    terms: Iterable[MplTerm], cfg: EvalConfig | None = None
) -> ValueWithError:
    total = ValueWithError.exact(0)
    for term in terms:
        total = total + term.evaluate(cfg)
    return total


def stuffle_linear(
    p: int, q: int, x: UnitParam, y: UnitParam
) -> list[MplTerm]:
    """`S_{p;q}(x;y) = Li_{p,q}(x,y) + Li_{p+q}(xy)`."""
    x, y = as_param(x), as_param(y)
    xy = param_product([x, y])
    return [
        _term(1, ((p, q), (x, y))),
        _term(1, ((p + q,), (xy,))),
    ]


def stuffle_quadratic(
    p1: int,
    p2: int,
    q: int,
    x1: UnitParam,
    x2: UnitParam,
    x: UnitParam,
) -> list[MplTerm]:
    """
    The six-term stuffle of `S_{p1,p2;q}(x1,x2;x)`:

        Li_{p1,p2,q}(x1,x2,x) + Li_{p2,p1,q}(x2,x1,x) + Li_{p1+p2,q}(x1x2,x)
        + Li_{p1,p2+q}(x1,x2x) + Li_{p2,p1+q}(x2,x1x) + Li_{p1+p2+q}(x1x2x)
    """
    x1, x2, x = as_param(x1), as_param(x2), as_param(x)
    x1x2 = param_product([x1, x2])
    return [
        _term(1, ((p1, p2, q), (x1, x2, x))),
        _term(1, ((p2, p1, q), (x2, x1, x))),
        _term(1, ((p1 + p2, q), (x1x2, x))),
        _term(1, ((p1, p2 + q), (x1, param_product([x2, x])))),
        _term(1, ((p2, p1 + q), (x2, param_product([x1, x])))),
        _term(1, ((p1 + p2 + q,), (param_product([x1x2, x]),))),
    ]


def quadratic_to_mpl_chain(
    p1: int,
    p2: int,
    q: int,
    x1: UnitParam,
    x2: UnitParam,
    x: UnitParam,
) -> list[MplTerm]:
    """
    Rewrite `S_{p1,p2;q}(x1,x2;x)` by splitting off `Li_{p1}(x1)`:

        - Li_{p2,q,p1}(x2,x,x1) - Li_{p2+q,p1}(x2x,x1)
        + Li_{p1}(x1) (Li_{p2,q}(x2,x) + Li_{p2+q}(x2x))

    Needs `(p1, x1) != (1, 1)` and `(q, x) != (1, 1)`.
    """
    x1, x2, x = as_param(x1), as_param(x2), as_param(x)
    if p1 == 1 and x1.is_one():
        raise DivergenceError("the chain needs (p1,x1) != (1,1).")
    if q == 1 and x.is_one():
        raise DivergenceError("the chain needs (q,x) != (1,1).")
    x2x = param_product([x2, x])
    return [
        _term(-1, ((p2, q, p1), (x2, x, x1))),
        _term(-1, ((p2 + q, p1), (x2x, x1))),
        _term(1, ((p1,), (x1,)), ((p2, q), (x2, x))),
        _term(1, ((p1,), (x1,)), ((p2 + q,), (x2x,))),
    ]


def euler_sum_as_mpls(spec: EulerSumSpec) -> list[MplTerm]:
    """The stuffle expansion of an order one or two Euler sum."""
    pairs = spec.pairs
    if spec.order == 1:
        [(p, x)] = pairs
        return stuffle_linear(p, spec.q, x, spec.outer)
    if spec.order == 2:
        (p1, x1), (p2, x2) = pairs
        return stuffle_quadratic(p1, p2, spec.q, x1, x2, spec.outer)
    raise DomainError("`spec` must have order one or two.")
