from __future__ import annotations

import enum
import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np
import polars as pl

from .._errors import DivergenceError, DomainError
from ..numerics.accel import extrapolate
from ..numerics.config import AccelMode, EvalConfig
from ..numerics.params import (
    RootOfUnity,
    UnitParam,
    as_param,
    canonical,
    common_period,
    param_inverse,
    param_product,
    snap_to_root,
)
from ..numerics.summation import running_sum
from ..numerics.values import ValueWithError
from ..series.eulersum import EulerSumSpec, euler_sum_eval
from ..series.polylog import powers_at
from .expansions import (
    HarmonicTable,
    big_phi_coefficients,
    big_phi_expansion,
    phi_expansion_neg,
    phi_expansion_pos,
    phi_neg_coefficients,
    phi_pos_coefficients,
    shift_coefficients,
)
from .laurent import LaurentSeries, ls_mul, monomial, pole_shift_binomial

__all__ = [
    "KernelSpec",
    "KernelVariant",
    "ParityDecomposition",
    "ResidueReport",
    "SignConvention",
    "kernel_residue",
    "parity_decompose",
    "residue_frame",
    "residue_total",
]

logger = logging.getLogger(__name__)

# smallest multiple of the period kept on the extrapolation ladder
_LADDER_FLOOR = 4
_LADDER_POINTS = 7


class KernelVariant(str, enum.Enum):
    F = "F"
    G = "G"


class SignConvention(str, enum.Enum):
    """`DISPLAY` is `(-1)**(sum(p) - r)`, `PROOF` is `(-1)**sum(p)`."""

    DISPLAY = "display"
    PROOF = "proof"


@dataclass(frozen=True)
class KernelSpec:
    """
    A contour kernel over normalized `phi` derivatives.

        F = sign * Phi(s; x) prod_j psi_{p_j}(s; x_j) / s**q
        G = sign * prod_j psi_{p_j}(s; x_j) / s**q

    with `psi_p = (-1)**(p-1) phi^(p-1) / (p-1)!`. Under the display
    convention `sign` is 1; the proof convention multiplies by `(-1)**r`.
    `big_phi_arg` is required for `F`, must be a root of unity, and must be
    absent for `G`.
    """

    variant: KernelVariant
    p: tuple[int, ...]
    q: int
    phi_args: tuple[UnitParam, ...]
    big_phi_arg: UnitParam | None = None
    sign_convention: SignConvention = SignConvention.DISPLAY

    def __post_init__(self) -> None:
        variant = KernelVariant(self.variant)
        p = tuple(int(pj) for pj in self.p)
        args = tuple(as_param(xj) for xj in self.phi_args)
        object.__setattr__(self, "variant", variant)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "phi_args", args)
        object.__setattr__(
            self, "sign_convention", SignConvention(self.sign_convention)
        )
        if not p:
            raise DomainError("`p` must not be empty.")
        if len(p) != len(args):
            raise DomainError("`p` and `phi_args` must have the same length.")
        if any(pj < 1 for pj in p) or self.q < 1:
            raise DomainError("`p` and `q` must be positive integers.")
        if variant is KernelVariant.F:
            if self.big_phi_arg is None:
                raise DomainError("`big_phi_arg` is required for F kernels.")
            root = snap_to_root(as_param(self.big_phi_arg))
            if root is None:
                raise DomainError(
                    "`big_phi_arg` must be a root of unity, "
                    f"got {self.big_phi_arg}."
                )
            object.__setattr__(self, "big_phi_arg", root)
        elif self.big_phi_arg is not None:
            raise DomainError("`big_phi_arg` must be None for G kernels.")
        for j, (pj, xj) in enumerate(zip(p, args), start=1):
            if pj == 1 and xj.is_one():
                raise DivergenceError(
                    f"phi(s;x_{j}) diverges at (p_{j},x_{j})=(1,1)."
                )
        if self.q == 1 and self.combined_arg.is_one():
            raise DivergenceError(
                "the kernel sums diverge at (q,x x_1...x_r)=(1,1)."
            )

    @property
    def r(self) -> int:
        return len(self.p)

    @property
    def weight(self) -> int:
        return sum(self.p)

    @property
    def sign(self) -> int:
        if self.sign_convention is SignConvention.PROOF:
            return (-1) ** self.r
        return 1

    @property
    def combined_arg(self) -> UnitParam:
        """`x x_1 ... x_r` for F kernels, `x_1 ... x_r` for G kernels."""
        extra = [self.big_phi_arg] if self.big_phi_arg is not None else []
        return param_product([*extra, *self.phi_args])

    @property
    def all_args(self) -> tuple[UnitParam, ...]:
        extra = (self.big_phi_arg,) if self.big_phi_arg is not None else ()
        return (*extra, *self.phi_args)

    @property
    def boundary(self) -> bool:
        return any(x.on_circle() for x in self.all_args)

    def pole_order(self, pole: int) -> int:
        """An upper bound on the order of the pole at the integer `pole`."""
        has_phi = int(self.variant is KernelVariant.F)
        if pole > 0:
            return has_phi
        if pole < 0:
            return self.weight + has_phi
        return self.weight + self.q + has_phi

    def with_convention(self, convention: SignConvention) -> KernelSpec:
        return KernelSpec(
            self.variant,
            self.p,
            self.q,
            self.phi_args,
            self.big_phi_arg,
            convention,
        )

    def __str__(self) -> str:
        ps = ",".join(map(str, self.p))
        xs = ",".join(canonical(xj) for xj in self.phi_args)
        head = f"{self.variant.value}_{{{ps};{self.q}}}({xs}"
        if self.big_phi_arg is not None:
            return f"{head};{canonical(self.big_phi_arg)})"
        return f"{head})"


def _tables(
    spec: KernelSpec, n_max: int, cfg: EvalConfig
) -> dict[UnitParam, HarmonicTable]:
    return {x: HarmonicTable(x, n_max, cfg) for x in set(spec.phi_args)}


def kernel_residue(
    spec: KernelSpec,
    pole: int,
    cfg: EvalConfig | None = None,
    tables: dict[UnitParam, HarmonicTable] | None = None,
) -> complex:
    """
    The residue of a kernel at an integer.

    Each factor is expanded around `pole` to exactly the window the pole
    order needs, the expansions are multiplied and the coefficient of
    `(s - pole)**-1` is read off.

    Parameters
    ----------
    spec
        The kernel.
    pole
        Any integer; G kernels are analytic at positive integers.
    cfg
        Evaluation settings for the polylogarithms in the expansions.
    tables
        Optional running sums per argument, as built by `residue_total()`.

    Returns
    -------
    complex
        The residue, including the kernel's sign.

    Examples
    -------
    ```{python}
    import eulersum as es

    spec = es.KernelSpec("F", (1,), 2, (es.as_param(-1),), es.as_param(1))
    es.kernel_residue(spec, 3)
    ```
    """
    order = spec.pole_order(pole)
    if order == 0:
        return 0j
    tables = tables or {}
    factors: list[LaurentSeries] = []
    for pj, xj in zip(spec.p, spec.phi_args):
        table = tables.get(xj)
        if pole <= 0:
            factors.append(
                phi_expansion_neg(-pole, pj, xj, order - pj, cfg, table)
            )
        else:
            factors.append(phi_expansion_pos(pole, pj, xj, order, cfg, table))
    if spec.big_phi_arg is not None:
        factors.append(big_phi_expansion(pole, spec.big_phi_arg, order - 1))
    if pole == 0:
        factors.append(monomial(0, -spec.q, order - 1 - spec.q))
    else:
        factors.append(pole_shift_binomial(spec.q, pole, order))
    product = factors[0]
    for factor in factors[1:]:
        product = ls_mul(product, factor)
    return spec.sign * product.residue()


def _row_product(rows: Sequence[np.ndarray], width: int) -> np.ndarray:
    # row-wise Cauchy product, truncated to the first `width` orders
    acc = rows[0][:, :width]
    for row in rows[1:]:
        out = np.zeros_like(acc)
        for i in range(width):
            for j in range(width - i):
                out[:, i + j] += acc[:, i] * row[:, j]
        acc = out
    return acc


def _batched_residues(
    spec: KernelSpec,
    ns: np.ndarray,
    negative: bool,
    cfg: EvalConfig,
    tables: dict[UnitParam, HarmonicTable],
) -> np.ndarray:
    # residues at -n (negative) or +n for every n >= 1 in `ns`
    order = spec.pole_order(-1 if negative else 1)
    if order == 0 or ns.size == 0:
        return np.zeros(ns.size, dtype=np.complex128)
    centers = -ns if negative else ns
    rows = []
    for pj, xj in zip(spec.p, spec.phi_args):
        if negative:
            rows.append(
                phi_neg_coefficients(
                    ns, pj, xj, order - pj, cfg, tables[xj]
                )
            )
        else:
            rows.append(
                phi_pos_coefficients(ns, pj, xj, order, cfg, tables[xj])
            )
    if spec.big_phi_arg is not None:
        rows.append(big_phi_coefficients(centers, spec.big_phi_arg, order - 1))
    rows.append(shift_coefficients(centers, spec.q, order))
    return spec.sign * _row_product(rows, order)[:, order - 1]


@dataclass(frozen=True)
class ResidueReport:
    """
    Residues of a kernel at `0, -1, 1, ..., -n_max, n_max` and their sum.

    `partial_totals[N]` adds the residues with `|n| <= N`. The kernel
    decays on circles through the half integers, so the totals tend to 0;
    `passed` holds when the extrapolated total is within `tol_used`.
    """

    spec: KernelSpec
    per_pole: dict[int, complex]
    partial_totals: tuple[complex, ...]
    extrapolated_total: ValueWithError
    tol_used: float
    passed: bool
    vanishing_conventions: tuple[SignConvention, ...] = field(default=())

    @property
    def n_max(self) -> int:
        return len(self.partial_totals) - 1


def _ladder(n_max: int, period: int) -> list[int]:
    ks: list[int] = []
    for i in range(_LADDER_POINTS):
        k = period * (n_max // (period * 2**i))
        if k < _LADDER_FLOOR * period:
            break
        if k not in ks:
            ks.append(k)
    return ks[::-1]


def _extrapolate_partials(
    spec: KernelSpec, partials: np.ndarray, cfg: EvalConfig
) -> ValueWithError:
    n_max = len(partials) - 1
    last = complex(partials[-1])
    fallback = abs(last - complex(partials[n_max // 2]))
    period = common_period(spec.all_args)
    if not spec.boundary:
        # every residue decays geometrically
        return ValueWithError(last, fallback, terms_used=n_max)
    ks = _ladder(n_max, period) if period is not None else []
    if cfg.accel_mode is AccelMode.NONE or len(ks) < 3:
        return ValueWithError(last, fallback, terms_used=n_max)
    value, err = extrapolate(
        ks, [complex(partials[k]) for k in ks], cfg.accel_mode
    )
    logger.debug("%s: extrapolated over %s, err %.2e", spec, ks, err)
    return ValueWithError(value, err, terms_used=n_max, accelerated=True)


def _all_residues(
    spec: KernelSpec, n_max: int, cfg: EvalConfig
) -> tuple[complex, np.ndarray, np.ndarray]:
    tables = _tables(spec, n_max, cfg)
    ns = np.arange(1, n_max + 1, dtype=np.int64)
    at_zero = kernel_residue(spec, 0, cfg, tables)
    at_neg = _batched_residues(spec, ns, True, cfg, tables)
    at_pos = _batched_residues(spec, ns, False, cfg, tables)
    return at_zero, at_neg, at_pos


def _check_n_max(n_max: int) -> None:
    if n_max < 1:
        raise DomainError("`n_max` must be a positive integer.")


def _partial_totals(
    spec: KernelSpec, n_max: int, cfg: EvalConfig
) -> tuple[dict[int, complex], np.ndarray]:
    at_zero, at_neg, at_pos = _all_residues(spec, n_max, cfg)
    per_pole = {0: at_zero}
    for n in range(1, n_max + 1):
        per_pole[-n] = complex(at_neg[n - 1])
        per_pole[n] = complex(at_pos[n - 1])
    partials = np.concatenate(([0j], running_sum(at_neg + at_pos)))
    return per_pole, partials + at_zero


def residue_total(
    spec: KernelSpec, n_max: int, cfg: EvalConfig | None = None
) -> ResidueReport:
    """
    Sum the residues of a kernel over `|n| <= n_max` and extrapolate.

    The totals through `N` are sampled at multiples of the common period of
    the arguments and extrapolated per `cfg.accel_mode`. Kernels whose
    arguments all lie inside the disk have geometrically small residues and
    use the last total. The residues are summed again under the other sign
    convention, and `vanishing_conventions` lists those whose total passes.

    Parameters
    ----------
    spec
        The kernel.
    n_max
        The largest `|n|` whose residue is computed.
    cfg
        Evaluation settings; the pass threshold is ten times the tolerance.

    Returns
    -------
    ResidueReport
        Per-pole residues, partial totals and the extrapolated total.

    Examples
    -------
    ```{python}
    import eulersum as es

    spec = es.KernelSpec("F", (1,), 2, (es.as_param(-1),), es.as_param(1))
    es.residue_total(spec, 2000).extrapolated_total
    ```
    """
    cfg = cfg or EvalConfig()
    _check_n_max(n_max)
    tol = 10 * cfg.tol_for(spec.boundary)
    per_pole, partials = _partial_totals(spec, n_max, cfg)
    total = _extrapolate_partials(spec, partials, cfg)
    passed = abs(total.value) <= tol
    logger.info(
        "%s: total %s over n_max=%d (%s)",
        spec,
        total,
        n_max,
        "pass" if passed else "FAIL",
    )
    vanishing = []
    for convention in SignConvention:
        if convention is spec.sign_convention:
            other_total = total
        else:
            other = spec.with_convention(convention)
            _, other_partials = _partial_totals(other, n_max, cfg)
            other_total = _extrapolate_partials(other, other_partials, cfg)
            logger.debug(
                "%s: %s total %s", spec, convention.value, other_total
            )
        if abs(other_total.value) <= tol:
            vanishing.append(convention)
    return ResidueReport(
        spec,
        per_pole,
        tuple(complex(t) for t in partials),
        total,
        tol,
        passed,
        tuple(vanishing),
    )


@dataclass(frozen=True)
class ParityDecomposition:
    """
    The residue total of an F kernel split by order.

    `order_r_forward` collects the order-`r` sums from the simple poles at
    `s = n`, `order_r_mirror` the term of the `s = -n` residues carrying
    `zeta_n(p_1; 1/x_1) ... zeta_n(p_r; 1/x_r)`, and `lower_order_remainder`
    everything else. The three add up to 0.
    """

    spec: KernelSpec
    order_r_forward: ValueWithError
    order_r_mirror: ValueWithError
    lower_order_remainder: ValueWithError
    tol_used: float

    @property
    def residual(self) -> ValueWithError:
        return (
            self.order_r_forward
            + self.order_r_mirror
            + self.lower_order_remainder
        )

    @property
    def passed(self) -> bool:
        return abs(self.residual.value) <= self.tol_used


def _require_roots(spec: KernelSpec) -> tuple[RootOfUnity, ...]:
    roots = tuple(snap_to_root(xj) for xj in spec.phi_args)
    if any(root is None for root in roots):
        raise DomainError("`phi_args` must be roots of unity.")
    return roots  # type: ignore[return-value]


def _forward_sum(
    spec: KernelSpec, roots: Sequence[RootOfUnity], cfg: EvalConfig
) -> ValueWithError:
    # sum_n X**-n prod zeta_{n-1}(p_j; x_j) / n**q with
    # zeta_{n-1} = zeta_n - x_j**n / n**p_j, expanded over subsets
    inv_combined = param_inverse(spec.combined_arg)
    total = ValueWithError.exact(0)
    idx = range(spec.r)
    for size in range(spec.r + 1):
        for dropped in combinations(idx, size):
            kept = [j for j in idx if j not in dropped]
            outer = param_product(
                [inv_combined, *(roots[j] for j in dropped)]
            )
            term = euler_sum_eval(
                EulerSumSpec(
                    tuple(spec.p[j] for j in kept),
                    spec.q + sum(spec.p[j] for j in dropped),
                    tuple(roots[j] for j in kept),
                    outer,
                ),
                cfg,
            )
            total = total + term * (-1) ** size
    return total * (spec.sign * (-1) ** spec.r)


def _mirror_sum(
    spec: KernelSpec, roots: Sequence[RootOfUnity], cfg: EvalConfig
) -> ValueWithError:
    value = euler_sum_eval(
        EulerSumSpec(
            spec.p,
            spec.q,
            tuple(root.inverse() for root in roots),
            spec.combined_arg,
        ),
        cfg,
    )
    return value * (spec.sign * (-1) ** (spec.weight + spec.q))


def _order_r_terms(
    spec: KernelSpec, n_max: int, cfg: EvalConfig
) -> tuple[np.ndarray, np.ndarray]:
    tables = _tables(spec, n_max, cfg)
    ns = np.arange(1, n_max + 1, dtype=np.int64)
    scale = ns.astype(float) ** -spec.q
    forward = powers_at(spec.combined_arg, -ns) * scale
    mirror = powers_at(spec.big_phi_arg, ns) * scale
    for pj, xj in zip(spec.p, spec.phi_args):
        forward = forward * tables[xj].zeta(pj)[ns - 1]
        mirror = mirror * tables[xj].reflected(pj)[ns]
    forward *= spec.sign * (-1) ** spec.r
    mirror *= spec.sign * (-1) ** (spec.weight + spec.q)
    return forward, mirror


def parity_decompose(
    spec: KernelSpec, n_max: int, cfg: EvalConfig | None = None
) -> ParityDecomposition:
    """
    Split the residue total of an F kernel into its order-`r` parts.

    The forward and mirrored sums are evaluated as Euler sums. The
    remainder is extrapolated from the partial residue totals with the
    order-`r` terms removed, so the check that the three parts cancel
    compares independent evaluations.

    Parameters
    ----------
    spec
        An F kernel whose `phi_args` are roots of unity.
    n_max
        The truncation of the residue sweep.
    cfg
        Evaluation settings.

    Returns
    -------
    ParityDecomposition
        The three parts and the tolerance they must cancel to.
    """
    cfg = cfg or EvalConfig()
    if spec.variant is not KernelVariant.F:
        raise DomainError("`spec` must be an F kernel.")
    _check_n_max(n_max)
    roots = _require_roots(spec)
    at_zero, at_neg, at_pos = _all_residues(spec, n_max, cfg)
    forward_terms, mirror_terms = _order_r_terms(spec, n_max, cfg)
    rest = at_neg + at_pos - forward_terms - mirror_terms
    partials = np.concatenate(([0j], running_sum(rest))) + at_zero
    remainder = _extrapolate_partials(spec, partials, cfg)
    forward = _forward_sum(spec, roots, cfg)
    mirror = _mirror_sum(spec, roots, cfg)
    tol = 10 * cfg.tol_for(True)
    out = ParityDecomposition(spec, forward, mirror, remainder, tol)
    logger.info(
        "%s: forward %s, mirror %s, remainder %s",
        spec,
        forward,
        mirror,
        remainder,
    )
    return out


def residue_frame(report: ResidueReport) -> pl.DataFrame:
    """
    The per-pole residues of a report as a DataFrame.

    Columns are `pole` (sorted ascending), `re`, `im` and `abs`.
    """
    poles = sorted(report.per_pole)
    values = [report.per_pole[n] for n in poles]
    return pl.DataFrame(
        {
            "pole": poles,
            "re": [v.real for v in values],
            "im": [v.imag for v in values],
            "abs": [abs(v) for v in values],
        },
        schema={
            "pole": pl.Int64,
            "re": pl.Float64,
            "im": pl.Float64,
            "abs": pl.Float64,
        },
    )
