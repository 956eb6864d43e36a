"""
Residues of the standard kernels in closed form.

These are the formulas a residue computation by hand produces for the
linear and quadratic kernels and for F and G kernels with unit exponents.
They are written term by term from the polylogarithm and finite-sum values,
without any series multiplication, and serve as an independent check of
`kernel_residue()` under the display sign convention.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from functools import partial
from itertools import combinations
from math import comb, prod

import numpy as np

from .._errors import DomainError
from .._utils import _compositions
from ..numerics.config import EvalConfig
from ..numerics.params import UnitParam, as_param, param_inverse
from ..series.polylog import (
    LI0_PAIR,
    finite_polylog_sum,
    polylog,
    powers_at,
    reflected_finite_sum,
)

__all__ = [
    "f_residue_pos",
    "li_pair",
    "linear_f_residue_neg",
    "linear_f_residue_zero",
    "phi_pair",
    "quadratic_f_residue_neg",
    "quadratic_f_residue_zero",
    "quadratic_g_residue_neg",
    "quadratic_g_residue_zero",
    "unit_f_residue_neg",
    "unit_f_residue_zero",
    "unit_g_residue_neg",
    "unit_g_residue_zero",
]


def _li(m: int, x: UnitParam, cfg: EvalConfig | None) -> complex:
    return polylog(m, x, cfg).value


def _pow(x: UnitParam, n: int) -> complex:
    return complex(powers_at(x, np.array([n]))[0])


def phi_pair(m: int, x: UnitParam, cfg: EvalConfig | None = None) -> complex:
    """`(-1)**m Li_{m+1}(x) - Li_{m+1}(1/x)`; 0 at `m = 0, x = 1`."""
    x = as_param(x)
    if m == 0 and x.is_one():
        return 0j
    return (-1) ** m * _li(m + 1, x, cfg) - _li(m + 1, param_inverse(x), cfg)


def li_pair(l: int, x: UnitParam, cfg: EvalConfig | None = None) -> complex:
    """`(-1)**l Li_l(x) + Li_l(1/x)`, with the pair at `l = 0` set to -1."""
    if l == 0:
        return complex(LI0_PAIR)
    return -phi_pair(l - 1, x, cfg)


def _neg_taylor(
    n: int, k: int, p: int, x: UnitParam, cfg: EvalConfig | None
) -> complex:
    # x**n ((-1)**k Li_{k+p}(x) + (-1)**p zeta_n(k+p; 1/x))
    li = _li(k + p, x, cfg)
    reflected = reflected_finite_sum(n, k + p, x)
    return (-1) ** k * _pow(x, n) * li + (-1) ** p * reflected


def f_residue_pos(
    n: int,
    p: Sequence[int],
    q: int,
    x: UnitParam,
    xs: Sequence[UnitParam],
    cfg: EvalConfig | None = None,
) -> complex:
    """
    The simple-pole residue of an F kernel at `s = n >= 1`:

        (x x_1...x_r)**-n n**-q prod_j (Li_{p_j}(x_j) - zeta_{n-1}(p_j; x_j))
    """
    if n < 1:
        raise DomainError("`n` must be a positive integer.")
    x = as_param(x)
    xs = [as_param(xj) for xj in xs]
    out = _pow(x, -n) / n**q
    for pj, xj in zip(p, xs):
        head = finite_polylog_sum(n - 1, pj, xj)
        out *= _pow(xj, -n) * (_li(pj, xj, cfg) - head)
    return out


def linear_f_residue_neg(
    n: int,
    p: int,
    q: int,
    x: UnitParam,
    y: UnitParam,
    cfg: EvalConfig | None = None,
) -> complex:
    """The residue of `Phi(s;x) psi_p(s;y) / s**q` at `s = -n`."""
    x, y = as_param(x), as_param(y)
    xn = _pow(x, n)
    xyn = xn * _pow(y, n)
    out = (-1) ** q * comb(p + q - 1, p) * xyn / n ** (p + q)
    out += (-1) ** q * xn * _neg_taylor(n, 0, p, y, cfg) / n**q
    for m in range(p):
        out += (
            (-1) ** q
            * comb(p + q - m - 2, q - 1)
            * phi_pair(m, x, cfg)
            * xyn
            / n ** (p + q - m - 1)
        )
    return out


def linear_f_residue_zero(
    p: int,
    q: int,
    x: UnitParam,
    y: UnitParam,
    cfg: EvalConfig | None = None,
) -> complex:
    """The residue of `Phi(s;x) psi_p(s;y) / s**q` at `s = 0`."""
    x, y = as_param(x), as_param(y)
    out = phi_pair(p + q - 1, x, cfg)
    out += (-1) ** q * comb(p + q - 1, p - 1) * _li(p + q, y, cfg)
    for m, k in _compositions(q - 1, 2):
        out += (
            (-1) ** k
            * comb(k + p - 1, p - 1)
            * _li(k + p, y, cfg)
            * phi_pair(m, x, cfg)
        )
    return out


def quadratic_f_residue_neg(
    n: int,
    p1: int,
    p2: int,
    q: int,
    x: UnitParam,
    x1: UnitParam,
    x2: UnitParam,
    cfg: EvalConfig | None = None,
) -> complex:
    """The residue of `Phi(s;x) psi_p1(s;x1) psi_p2(s;x2) / s**q` at `-n`."""
    x, x1, x2 = as_param(x), as_param(x1), as_param(x2)
    xn, x1n, x2n = _pow(x, n), _pow(x1, n), _pow(x2, n)
    sq = (-1) ** q
    out = sq * comb(p1 + p2 + q - 1, p1 + p2) * xn * x1n * x2n
    out /= n ** (q + p1 + p2)
    for (pa, xa), (pb, nb) in (((p1, x1), (p2, x2n)), ((p2, x2), (p1, x1n))):
        # Taylor part of one factor against the principal part of the other
        for k in range(pb + 1):
            out += (
                sq
                * comb(k + pa - 1, pa - 1)
                * comb(q + pb - k - 1, q - 1)
                * xn
                * nb
                * _neg_taylor(n, k, pa, xa, cfg)
                / n ** (pb + q - k)
            )
        for k1 in range(pb):
            for k2 in range(pb - k1):
                out += (
                    sq
                    * comb(q + pb - k1 - k2 - 2, q - 1)
                    * phi_pair(k1, x, cfg)
                    * comb(k2 + pa - 1, pa - 1)
                    * xn
                    * nb
                    * _neg_taylor(n, k2, pa, xa, cfg)
                    / n ** (pb + q - k1 - k2 - 1)
                )
    out += (
        sq
        * xn
        * _neg_taylor(n, 0, p1, x1, cfg)
        * _neg_taylor(n, 0, p2, x2, cfg)
        / n**q
    )
    for k in range(p1 + p2):
        out += (
            sq
            * comb(q + p1 + p2 - k - 2, q - 1)
            * phi_pair(k, x, cfg)
            * xn
            * x1n
            * x2n
            / n ** (q + p1 + p2 - k - 1)
        )
    return out


def quadratic_f_residue_zero(
    p1: int,
    p2: int,
    q: int,
    x: UnitParam,
    x1: UnitParam,
    x2: UnitParam,
    cfg: EvalConfig | None = None,
) -> complex:
    """The residue of `Phi(s;x) psi_p1(s;x1) psi_p2(s;x2) / s**q` at 0."""
    x, x1, x2 = as_param(x), as_param(x1), as_param(x2)

    def b(k: int, p: int, xj: UnitParam) -> complex:
        return (-1) ** k * comb(k + p - 1, p - 1) * _li(k + p, xj, cfg)

    w = p1 + p2 + q
    out = 0j
    for k1, k2 in _compositions(q, 2):
        out += b(k1, p1, x1) * b(k2, p2, x2)
    out += comb(w - 1, p1 - 1) * (-1) ** (p2 + q) * _li(w, x1, cfg)
    out += comb(w - 1, p2 - 1) * (-1) ** (p1 + q) * _li(w, x2, cfg)
    for k1, k2, k3 in _compositions(q - 1, 3):
        out += phi_pair(k1, x, cfg) * b(k2, p1, x1) * b(k3, p2, x2)
    out += phi_pair(w - 1, x, cfg)
    for k1, k2 in _compositions(p1 + q - 1, 2):
        out += phi_pair(k1, x, cfg) * b(k2, p2, x2)
    for k1, k2 in _compositions(p2 + q - 1, 2):
        out += phi_pair(k1, x, cfg) * b(k2, p1, x1)
    return out


def quadratic_g_residue_neg(
    n: int,
    p1: int,
    p2: int,
    q: int,
    x1: UnitParam,
    x2: UnitParam,
    cfg: EvalConfig | None = None,
) -> complex:
    """The residue of `psi_p1(s;x1) psi_p2(s;x2) / s**q` at `s = -n`."""
    x1, x2 = as_param(x1), as_param(x2)
    x1n, x2n = _pow(x1, n), _pow(x2, n)
    sq = (-1) ** q
    out = sq * comb(q + p1 + p2 - 2, q - 1) * x1n * x2n
    out /= n ** (q + p1 + p2 - 1)
    for (pa, xa), (pb, nb) in (((p1, x1), (p2, x2n)), ((p2, x2), (p1, x1n))):
        for k in range(pb):
            out += (
                sq
                * comb(k + pa - 1, pa - 1)
                * comb(q + pb - k - 2, q - 1)
                * nb
                * _neg_taylor(n, k, pa, xa, cfg)
                / n ** (q + pb - k - 1)
            )
    return out


def quadratic_g_residue_zero(
    p1: int,
    p2: int,
    q: int,
    x1: UnitParam,
    x2: UnitParam,
    cfg: EvalConfig | None = None,
) -> complex:
    """The residue of `psi_p1(s;x1) psi_p2(s;x2) / s**q` at `s = 0`."""
    x1, x2 = as_param(x1), as_param(x2)
    w = p1 + p2 + q - 1
    out = (-1) ** (p1 + q - 1) * comb(w - 1, p2 - 1) * _li(w, x2, cfg)
    out += (-1) ** (p2 + q - 1) * comb(w - 1, p1 - 1) * _li(w, x1, cfg)
    for k1, k2 in _compositions(q - 1, 2):
        out += (
            (-1) ** (q - 1)
            * comb(k1 + p1 - 1, p1 - 1)
            * comb(k2 + p2 - 1, p2 - 1)
            * _li(k1 + p1, x1, cfg)
            * _li(k2 + p2, x2, cfg)
        )
    return out


def _simple_pole_residue(
    principal: Sequence[complex],
    taylor: Sequence[Callable[[int], complex]],
    weight: Callable[[int], complex],
    shift: int = 0,
) -> complex:
    # residue at t = 0 of prod_j (a_j/t + sum_k c_j(k) t**k) times
    # t**-shift sum_m e(m) t**m: a subset T of the factors contributes its
    # Taylor coefficients, the rest their principal parts
    r = len(principal)
    out = 0j
    for size in range(r + 1):
        for chosen in combinations(range(r), size):
            held = prod(
                (principal[j] for j in range(r) if j not in chosen), start=1
            )
            budget = r - size - 1 + shift
            for total in range(budget + 1):
                for ks in _compositions(total, size):
                    out += (
                        held
                        * weight(budget - total)
                        * prod(
                            (taylor[j](k) for j, k in zip(chosen, ks)),
                            start=1,
                        )
                    )
    return out


def _neg_factors(
    n: int, xs: Sequence[UnitParam], cfg: EvalConfig | None
) -> tuple[list[complex], list[Callable[[int], complex]]]:
    principal = [_pow(xj, n) for xj in xs]
    taylor = [partial(_neg_taylor, n, p=1, x=xj, cfg=cfg) for xj in xs]
    return principal, taylor


def _zero_factors(
    xs: Sequence[UnitParam], cfg: EvalConfig | None
) -> tuple[list[complex], list[Callable[[int], complex]]]:
    def taylor(xj: UnitParam) -> Callable[[int], complex]:
        return lambda k: (-1) ** k * _li(k + 1, xj, cfg)

    return [1] * len(xs), [taylor(xj) for xj in xs]


def _shift_weight(n: int, q: int) -> Callable[[int], complex]:
    # s**-q = (-1)**q sum_m C(m+q-1, q-1) (s+n)**m / n**(q+m)
    return lambda m: (-1) ** q * comb(m + q - 1, q - 1) / n ** (q + m)


def _at_zero(m: int) -> complex:
    return 1 if m == 0 else 0


def unit_g_residue_neg(
    n: int,
    q: int,
    xs: Sequence[UnitParam],
    cfg: EvalConfig | None = None,
) -> complex:
    """
    The residue of `phi(s;x_1)...phi(s;x_r) / s**q` at `s = -n`.

    A subset `T` of the factors contributes its Taylor coefficients, the
    rest their principal parts `x_j**n / (s+n)`:

        (-1)**q sum_T sum_k C(m+q-1, q-1) / n**(q+m)
            prod_{j in T} A_j(k_j) prod_{j not in T} x_j**n

    with `m = r - |T| - 1 - sum(k)` and
    `A_j(k) = x_j**n (-1)**k Li_{k+1}(x_j) - x_j**n zeta_n(k+1; 1/x_j)`.
    """
    xs = [as_param(xj) for xj in xs]
    principal, taylor = _neg_factors(n, xs, cfg)
    return _simple_pole_residue(principal, taylor, _shift_weight(n, q))


def unit_g_residue_zero(
    q: int, xs: Sequence[UnitParam], cfg: EvalConfig | None = None
) -> complex:
    """
    The residue of `phi(s;x_1)...phi(s;x_r) / s**q` at `s = 0`.

    Factors outside `T` give `1/s`; those in `T` give `(-1)**k Li_{k+1}`
    with the exponents summing to `q - 1 + r - |T|`.
    """
    xs = [as_param(xj) for xj in xs]
    principal, taylor = _zero_factors(xs, cfg)
    return _simple_pole_residue(principal, taylor, _at_zero, q)


def unit_f_residue_neg(
    n: int,
    q: int,
    x: UnitParam,
    xs: Sequence[UnitParam],
    cfg: EvalConfig | None = None,
) -> complex:
    """
    The residue of `Phi(s;x) phi(s;x_1)...phi(s;x_r) / s**q` at `s = -n`.

    `Phi` joins the factors with principal part `x**n / (s+n)` and Taylor
    coefficients `x**n ((-1)**k Li_{k+1}(x) - Li_{k+1}(1/x))`.
    """
    x = as_param(x)
    xs = [as_param(xj) for xj in xs]
    principal, taylor = _neg_factors(n, xs, cfg)
    xn = _pow(x, n)
    principal.append(xn)
    taylor.append(lambda k: xn * phi_pair(k, x, cfg))
    return _simple_pole_residue(principal, taylor, _shift_weight(n, q))


def unit_f_residue_zero(
    q: int,
    x: UnitParam,
    xs: Sequence[UnitParam],
    cfg: EvalConfig | None = None,
) -> complex:
    """The residue of `Phi(s;x) phi(s;x_1)...phi(s;x_r) / s**q` at 0."""
    x = as_param(x)
    xs = [as_param(xj) for xj in xs]
    principal, taylor = _zero_factors(xs, cfg)
    principal.append(1)
    taylor.append(lambda k: phi_pair(k, x, cfg))
    return _simple_pole_residue(principal, taylor, _at_zero, q)
