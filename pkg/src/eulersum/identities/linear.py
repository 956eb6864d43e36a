"""
Linear sums: parity of double polylogarithms and the G-kernel combinations
of `S_{p;q}` with their equal-argument and classical specializations.
"""

from __future__ import annotations

from functools import partial

from .._utils import _binom, _compositions
from ..numerics.params import as_param
from ..numerics.values import ValueWithError, vsum
from .record import (
    IdentityRecord,
    Params,
    Reading,
    exponent,
    nonunit_clause,
    root,
    unit_clause,
)
from .terms import Evaluator, inv, mul

__all__ = ["LINEAR_RECORDS"]


# double polylogarithm parity


def _dilog_parity_lhs(ev: Evaluator, a: Params) -> ValueWithError:
    p, q, x, y = a["p"], a["q"], a["x"], a["y"]
    xy = mul(x, y)
    return ev.mpl((p, q), (y, inv(xy))) - ev.mpl(
        (p, q), (inv(y), xy)
    ) * (-1) ** (p + q)


def _dilog_parity_rhs(ev: Evaluator, a: Params) -> ValueWithError:
    p, q, x, y = a["p"], a["q"], a["x"], a["y"]
    xy = mul(x, y)
    sq = (-1) ** q
    out = ev.li(p, y) * ev.li(q, inv(xy))
    out += ev.li(p, y) * ev.li(q, xy) * sq
    out -= ev.li(p + q, inv(x))
    out -= vsum(
        ev.li_pair(l, x) * ev.li(p + q - l, xy) * _binom(p + q - l - 1, q - 1)
        for l in range(p + 1)
    ) * sq
    out -= vsum(
        ev.li_pair(l, inv(x))
        * ev.li(p + q - l, y)
        * _binom(p + q - l - 1, p - 1)
        for l in range(q + 1)
    ) * sq
    return out


def _dilog_parity_constraints(a: Params) -> list[str]:
    return [
        *unit_clause("(p,y)=(1,1)", a["p"], a["y"]),
        *unit_clause("(q,xy)=(1,1)", a["q"], a["x"], a["y"]),
    ]


# G-kernel combination of two linear sums


def _weights(pa: int, pb: int, q: int, k: int) -> int:
    return _binom(k + pa - 1, pa - 1) * _binom(q + pb - k - 2, q - 1)


def _g_linear_lhs(ev: Evaluator, a: Params) -> ValueWithError:
    p1, p2, q, x1, x2 = a["p1"], a["p2"], a["q"], a["x1"], a["x2"]
    x12 = mul(x1, x2)
    first = vsum(
        ev.s((k + p1,), q + p2 - k - 1, (inv(x1),), x12)
        * _weights(p1, p2, q, k)
        for k in range(p2)
    )
    second = vsum(
        ev.s((k + p2,), q + p1 - k - 1, (inv(x2),), x12)
        * _weights(p2, p1, q, k)
        for k in range(p1)
    )
    return first * (-1) ** p1 + second * (-1) ** p2


def _g_linear_rhs(
    ev: Evaluator, a: Params, mirrored: str = "x1"
) -> ValueWithError:
    p1, p2, q, x1, x2 = a["p1"], a["p2"], a["q"], a["x1"], a["x2"]
    x12 = mul(x1, x2)
    w = p1 + p2 + q - 1
    out = ev.li(w, x2) * ((-1) ** p1 * _binom(w - 1, p2 - 1))
    out += ev.li(w, x1) * ((-1) ** p2 * _binom(w - 1, p1 - 1))
    out += vsum(
        ev.li(k1 + p1, x1)
        * ev.li(k2 + p2, x2)
        * (_binom(k1 + p1 - 1, p1 - 1) * _binom(k2 + p2 - 1, p2 - 1))
        for k1, k2 in _compositions(q - 1, 2)
    )
    out -= vsum(
        ev.li(k + p1, x1) * ev.li(q + p2 - k - 1, x12)
        * (_weights(p1, p2, q, k) * (-1) ** k)
        for k in range(p2)
    )
    out -= vsum(
        ev.li(k + p2, a[mirrored]) * ev.li(q + p1 - k - 1, x12)
        * (_weights(p2, p1, q, k) * (-1) ** k)
        for k in range(p1)
    )
    out -= ev.li(w, x12) * _binom(w - 1, q - 1)
    return out


def _g_linear_constraints(a: Params) -> list[str]:
    return [
        *nonunit_clause("x1", a["x1"]),
        *nonunit_clause("x2", a["x2"]),
        *unit_clause("(q,x1x2)=(1,1)", a["q"], a["x1"], a["x2"]),
    ]


def _unit_pair_lhs(ev: Evaluator, a: Params) -> ValueWithError:
    q, x1, x2 = a["q"], a["x1"], a["x2"]
    x12 = mul(x1, x2)
    return ev.s((1,), q, (inv(x1),), x12) + ev.s((1,), q, (inv(x2),), x12)


def _unit_pair_rhs(ev: Evaluator, a: Params) -> ValueWithError:
    q, x1, x2 = a["q"], a["x1"], a["x2"]
    x12 = mul(x1, x2)
    out = ev.li(q + 1, x12) * q + ev.li(q + 1, x1) + ev.li(q + 1, x2)
    out += (ev.li(1, x1) + ev.li(1, x2)) * ev.li(q, x12)
    out -= vsum(
        ev.li(k1 + 1, x1) * ev.li(k2 + 1, x2)
        for k1, k2 in _compositions(q - 1, 2)
    )
    return out


def _unit_pair_constraints(a: Params) -> list[str]:
    return [
        *nonunit_clause("x1", a["x1"]),
        *nonunit_clause("x2", a["x2"]),
        *unit_clause("(q,x1x2)=(1,1)", a["q"], a["x1"], a["x2"]),
    ]


def _equal_pair_lhs(ev: Evaluator, a: Params) -> ValueWithError:
    q, x = a["q"], a["x"]
    return ev.s((1,), q, (inv(x),), mul(x, x))


def _equal_pair_rhs(ev: Evaluator, a: Params) -> ValueWithError:
    q, x = a["q"], a["x"]
    xx = mul(x, x)
    out = ev.li(q + 1, xx) * (q / 2) + ev.li(q + 1, x)
    out += ev.li(1, x) * ev.li(q, xx)
    out -= vsum(
        ev.li(k1 + 1, x) * ev.li(k2 + 1, x)
        for k1, k2 in _compositions(q - 1, 2)
    ) * 0.5
    return out


def _equal_pair_constraints(a: Params) -> list[str]:
    return [
        *nonunit_clause("x", a["x"]),
        *unit_clause("(q,x^2)=(1,1)", a["q"], a["x"], a["x"]),
    ]


def _harmonic_lhs(ev: Evaluator, a: Params) -> ValueWithError:
    one = as_param(1)
    return ev.s((1,), a["q"], (one,), one)


def _harmonic_rhs(ev: Evaluator, a: Params) -> ValueWithError:
    q = a["q"]
    one = as_param(1)
    out = ev.li(q + 1, one) * (1 + q / 2)
    out -= vsum(
        ev.li(k + 1, one) * ev.li(q - k, one) for k in range(1, q - 1)
    ) * 0.5
    return out


def _harmonic_constraints(a: Params) -> list[str]:
    return ["q=1"] if a["q"] < 2 else []


LINEAR_RECORDS = (
    IdentityRecord(
        id="thm-3.1",
        anchor="(p,y), (q,xy)\\neq (1,1)",
        title="parity of double polylogarithms at roots of unity",
        params_schema=(exponent("p"), exponent("q"), root("x"), root("y")),
        lhs_eval=_dilog_parity_lhs,
        rhs_eval=_dilog_parity_rhs,
        constraints=_dilog_parity_constraints,
    ),
    IdentityRecord(
        id="thm-3.2",
        anchor=(
            "\\binom{p_1+p_2+q-2}{p_2-1}\\Li_{p_1+p_2+q-1}(x_2)"
        ),
        title="G-kernel combination of linear sums at x_j^{-1}",
        params_schema=(
            exponent("p1"),
            exponent("p2"),
            exponent("q"),
            root("x1"),
            root("x2"),
        ),
        lhs_eval=_g_linear_lhs,
        rhs_eval=_g_linear_rhs,
        constraints=_g_linear_constraints,
        variants={
            "mirrored-sum-at-x2": Reading(
                rhs=partial(_g_linear_rhs, mirrored="x2")
            )
        },
    ),
    IdentityRecord(
        id="cor-3.3",
        anchor="q\\Li_{q+1}(x_1x_2)+\\Li_{q+1}(x_1)",
        title="S_{1;q}(x1^{-1};x1x2) + S_{1;q}(x2^{-1};x1x2)",
        params_schema=(exponent("q"), root("x1"), root("x2")),
        lhs_eval=_unit_pair_lhs,
        rhs_eval=_unit_pair_rhs,
        constraints=_unit_pair_constraints,
    ),
    IdentityRecord(
        id="eq-3.5",
        anchor="if letting $x_1=x_2=x$ yields",
        title="S_{1;q}(x^{-1};x^2)",
        params_schema=(exponent("q"), root("x")),
        lhs_eval=_equal_pair_lhs,
        rhs_eval=_equal_pair_rhs,
        constraints=_equal_pair_constraints,
    ),
    IdentityRecord(
        id="eq-3.6",
        anchor="(1+\\frac{q}{2})\\ze(q+1)",
        title="the classical linear sum S_{1;q}",
        params_schema=(exponent("q", high=6),),
        lhs_eval=_harmonic_lhs,
        rhs_eval=_harmonic_rhs,
        constraints=_harmonic_constraints,
    ),
)
