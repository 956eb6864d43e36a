"""
Quadratic sums: the parity of `S_{p1,p2;q}` at roots of unity, its unit
corollary and worked examples, the symmetric G-kernel theorem and the
rewriting of a quadratic sum as multiple polylogarithms.
"""

from __future__ import annotations

from functools import partial

from .._utils import _binom, _bounded_compositions, _compositions
from ..numerics.values import ValueWithError, vsum
from ..series.eulersum import quadratic_to_mpl_chain
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

__all__ = ["QUADRATIC_RECORDS"]

# both orderings of two indices
_SWAPS = ((0, 1), (1, 0))


def _parity_lhs(ev: Evaluator, a: Params) -> ValueWithError:
    p1, p2, q = a["p1"], a["p2"], a["q"]
    x, x1, x2 = a["x"], a["x1"], a["x2"]
    big = mul(x, x1, x2)
    sign = (-1) ** (p1 + p2 + q)
    return ev.s((p1, p2), q, (x1, x2), inv(big)) + ev.s(
        (p1, p2), q, (inv(x1), inv(x2)), big
    ) * sign


def _parity_rhs(ev: Evaluator, a: Params) -> ValueWithError:
    p1, p2, q = a["p1"], a["p2"], a["q"]
    x, x1, x2 = a["x"], a["x1"], a["x2"]
    p, xs = (p1, p2), (x1, x2)
    big = mul(x, x1, x2)
    w = p1 + p2 + q
    sq = (-1) ** q
    out = -ev.li(p1, x1) * ev.li(p2, x2) * ev.li(q, inv(big))
    out -= ev.li(w, inv(x))
    out -= ev.li(w, big) * (sq * _binom(w - 1, p1 + p2))
    for i, j in _SWAPS:
        out += ev.s((p[i],), p[j] + q, (xs[i],), mul(xs[j], inv(big)))
        out += ev.li(p[i], xs[i]) * (
            ev.s((p[j],), q, (xs[j],), inv(big))
            - ev.li(p[j] + q, mul(xs[j], inv(big)))
        )
        for k in range(p[j] + 1):
            c = _binom(k + p[i] - 1, p[i] - 1) * _binom(
                q + p[j] - k - 1, q - 1
            )
            block = ev.li(k + p[i], xs[i]) * (
                ev.li(p[j] + q - k, big) * (-1) ** (k + q)
            ) + ev.s((k + p[i],), p[j] + q - k, (inv(xs[i]),), big) * (
                (-1) ** (p[i] + q)
            )
            out -= block * c
        for k1, k2 in _bounded_compositions(p[j] - 1, 2):
            c = _binom(k2 + p[i] - 1, p[i] - 1) * _binom(
                q + p[j] - k1 - k2 - 2, q - 1
            )
            m = p[j] + q - k1 - k2 - 1
            block = ev.li(k2 + p[i], xs[i]) * ev.li(m, big) * (
                (-1) ** (k2 + q)
            ) + ev.s((k2 + p[i],), m, (inv(xs[i]),), big) * (
                (-1) ** (p[i] + q)
            )
            out -= ev.pair(k1, x) * block * c
        out -= ev.li(p[j], xs[j]) * ev.s(
            (p[i],), q, (inv(xs[i]),), big
        ) * ((-1) ** (p[i] + q))
    out -= ev.li(p1, x1) * ev.li(p2, x2) * ev.li(q, big) * sq
    out -= vsum(
        ev.pair(k, x)
        * ev.li(q + p1 + p2 - k - 1, big)
        * _binom(q + p1 + p2 - k - 2, q - 1)
        for k in range(p1 + p2)
    ) * sq
    out -= vsum(
        ev.li(k1 + p1, x1)
        * ev.li(k2 + p2, x2)
        * (_binom(k1 + p1 - 1, p1 - 1) * _binom(k2 + p2 - 1, p2 - 1))
        for k1, k2 in _compositions(q, 2)
    ) * sq
    out -= ev.li(w, x1) * ((-1) ** (p2 + q) * _binom(w - 1, p1 - 1))
    out -= ev.li(w, x2) * ((-1) ** (p1 + q) * _binom(w - 1, p2 - 1))
    out -= vsum(
        ev.pair(k1, x)
        * _signed_li(ev, k2, p1, x1)
        * _signed_li(ev, k3, p2, x2)
        for k1, k2, k3 in _compositions(q - 1, 3)
    )
    out += ev.li(w, x) * (-1) ** w + ev.li(w, inv(x))
    out -= vsum(
        ev.pair(k1, x) * _signed_li(ev, k2, p2, x2)
        for k1, k2 in _compositions(p1 + q - 1, 2)
    )
    out -= vsum(
        ev.pair(k1, x) * _signed_li(ev, k2, p1, x1)
        for k1, k2 in _compositions(p2 + q - 1, 2)
    )
    return out


def _signed_li(ev: Evaluator, k: int, p: int, x) -> ValueWithError:
    """`C(k+p-1, p-1) (-1)**k Li_{k+p}(x)`."""
    return ev.li(k + p, x) * (_binom(k + p - 1, p - 1) * (-1) ** k)


def _parity_constraints(a: Params) -> list[str]:
    return [
        *unit_clause("(p1,x1)=(1,1)", a["p1"], a["x1"]),
        *unit_clause("(p2,x2)=(1,1)", a["p2"], a["x2"]),
        *unit_clause("(q,xx1x2)=(1,1)", a["q"], a["x"], a["x1"], a["x2"]),
    ]


# the unit corollary, as displayed


def _unit_parity_lhs(ev: Evaluator, a: Params) -> ValueWithError:
    q, x, x1, x2 = a["q"], a["x"], a["x1"], a["x2"]
    big = mul(x, x1, x2)
    return ev.s((1, 1), q, (x1, x2), inv(big)) + ev.s(
        (1, 1), q, (inv(x1), inv(x2)), big
    ) * (-1) ** q


def _unit_parity_rhs(
    ev: Evaluator, a: Params, inverse_args: bool = False
) -> ValueWithError:
    q, x, x1, x2 = a["q"], a["x"], a["x1"], a["x2"]
    big = mul(x, x1, x2)
    sq = (-1) ** q
    l1, l2 = ev.li(1, x1), ev.li(1, x2)
    p0 = ev.pair(0, x)
    li_big = ev.li(q, big)

    def cross(xj):
        z = mul(x, xj)
        return ev.li(q + 1, inv(z) if inverse_args else z)

    s1 = {j: ev.s((1,), q, (inv(xj),), big) for j, xj in ((1, x1), (2, x2))}
    out = -ev.li(q + 2, inv(x)) - l1 * l2 * ev.li(q, inv(big))
    out -= ev.li(q + 2, big) * (sq * _binom(q + 1, 2))
    out += ev.s((1,), q + 1, (x1,), inv(mul(x, x1)))
    out += ev.s((1,), q + 1, (x2,), inv(mul(x, x2)))
    out += l1 * ev.s((1,), q, (x2,), inv(big)) - l1 * cross(x1)
    out += l2 * ev.s((1,), q, (x1,), inv(big)) - l2 * cross(x2)
    for lj, xj in ((l1, x1), (l2, x2)):
        out -= lj * ev.li(q + 1, big) * (sq * q)
        out += ev.s((1,), q + 1, (inv(xj),), big) * (sq * q)
        out += ev.li(2, xj) * li_big * sq
        out += ev.s((2,), q, (inv(xj),), big) * sq
    out -= p0 * (l2 * li_big * sq - s1[2] * sq)
    out -= p0 * (l1 * li_big * sq - s1[1] * sq)
    out -= l1 * l2 * li_big * sq
    out += (l1 * s1[2] + l2 * s1[1]) * sq
    out -= p0 * ev.li(q + 1, big) * (sq * q)
    out += ev.li_pair(2, x) * li_big * sq
    out += (ev.li(q + 2, x1) + ev.li(q + 2, x2)) * sq
    out -= vsum(
        ev.li(k1 + 1, x1) * ev.li(k2 + 1, x2)
        for k1, k2 in _compositions(q, 2)
    ) * sq
    out += ev.li(q + 2, x) * sq + ev.li(q + 2, inv(x))
    out -= vsum(
        ev.pair(k1, x)
        * ev.li(k2 + 1, x1)
        * ev.li(k3 + 1, x2)
        * (-1) ** (k2 + k3)
        for k1, k2, k3 in _compositions(q - 1, 3)
    )
    for xj in (x2, x1):
        out -= vsum(
            ev.pair(k1, x) * ev.li(k2 + 1, xj) * (-1) ** k2
            for k1, k2 in _compositions(q, 2)
        )
    return out


def _unit_parity_constraints(a: Params) -> list[str]:
    return [
        *nonunit_clause("x1", a["x1"]),
        *nonunit_clause("x2", a["x2"]),
        *unit_clause("(q,xx1x2)=(1,1)", a["q"], a["x"], a["x1"], a["x2"]),
    ]


# worked examples at (p1,p2,q) = (1,2,2) and (1,1,2)


def _example_122_lhs(ev: Evaluator, a: Params) -> ValueWithError:
    x, x1, x2 = a["x"], a["x1"], a["x2"]
    big = mul(x, x1, x2)
    return ev.s((1, 2), 2, (x1, x2), inv(big)) - ev.s(
        (1, 2), 2, (inv(x1), inv(x2)), big
    )


def _example_122_rhs(ev: Evaluator, a: Params) -> ValueWithError:
    x, x1, x2 = a["x"], a["x1"], a["x2"]
    big = mul(x, x1, x2)
    l1 = ev.li(1, x1)
    p0, a2, p2 = ev.pair(0, x), ev.li_pair(2, x), ev.pair(2, x)

    def li(k, z):
        return ev.li(k, z)

    def s(p, q, xj, outer):
        return ev.s((p,), q, (xj,), outer)

    terms = [
        -l1 * li(2, x2) * li(2, inv(big)),
        -li(5, inv(x)),
        -4 * li(5, big),
        s(1, 4, x1, inv(mul(x, x1))),
        s(2, 3, x2, inv(mul(x, x2))),
        l1 * s(2, 2, x2, inv(big)),
        -l1 * li(4, inv(mul(x, x1))),
        li(2, x2) * s(1, 2, x1, inv(big)),
        -li(2, x2) * li(3, inv(mul(x, x2))),
        -3 * l1 * li(4, big),
        3 * s(1, 4, inv(x1), big),
        2 * li(2, x1) * li(3, big),
        2 * s(2, 3, inv(x1), big),
        -li(3, x1) * li(2, big),
        s(3, 2, inv(x1), big),
        -2 * li(2, x2) * li(3, big),
        -2 * s(2, 3, inv(x2), big),
        2 * li(3, x2) * li(2, big),
        -2 * s(3, 2, inv(x2), big),
        -p0 * li(2, x2) * li(2, big),
        -p0 * s(2, 2, inv(x2), big),
        -2 * p0 * l1 * li(3, big),
        a2 * l1 * li(2, big),
        p0 * li(2, x1) * li(2, big),
        2 * p0 * s(1, 3, inv(x1), big),
        -a2 * s(1, 2, inv(x1), big),
        p0 * s(2, 2, inv(x1), big),
        -l1 * li(2, x2) * li(2, big),
        -l1 * s(2, 2, inv(x2), big),
        li(2, x2) * s(1, 2, inv(x1), big),
        -3 * p0 * li(4, big),
        2 * a2 * li(3, big),
        -p2 * li(2, big),
        -3 * l1 * li(4, x2),
        -li(3, x1) * li(2, x2),
        -2 * li(2, x1) * li(3, x2),
        -li(5, x1),
        4 * li(5, x2),
        a2 * l1 * li(2, x2),
        p0 * li(2, x1) * li(2, x2),
        2 * p0 * l1 * li(3, x2),
        -li(5, x),
        li(5, inv(x)),
        -2 * a2 * li(3, x2),
        -p2 * li(2, x2),
        -3 * p0 * li(4, x2),
        ev.li_pair(4, x) * l1,
        p2 * li(2, x1),
        a2 * li(3, x1),
        p0 * li(4, x1),
    ]
    return vsum(terms)


def _example_112_lhs(ev: Evaluator, a: Params) -> ValueWithError:
    x, x1, x2 = a["x"], a["x1"], a["x2"]
    big = mul(x, x1, x2)
    return ev.s((1, 1), 2, (x1, x2), inv(big)) + ev.s(
        (1, 1), 2, (inv(x1), inv(x2)), big
    )


def _example_112_rhs(ev: Evaluator, a: Params) -> ValueWithError:
    x, x1, x2 = a["x"], a["x1"], a["x2"]
    big = mul(x, x1, x2)
    l1, l2 = ev.li(1, x1), ev.li(1, x2)
    p0, a2, p2 = ev.pair(0, x), ev.li_pair(2, x), ev.pair(2, x)

    def li(k, z):
        return ev.li(k, z)

    def s(p, q, xj, outer):
        return ev.s((p,), q, (xj,), outer)

    terms = [
        -li(4, inv(x)),
        -l1 * l2 * li(2, inv(big)),
        -3 * li(4, big),
        s(1, 3, x1, inv(mul(x, x1))),
        s(1, 3, x2, inv(mul(x, x2))),
        l1 * s(1, 2, x2, inv(big)),
        -l1 * li(3, inv(mul(x, x1))),
        l2 * s(1, 2, x1, inv(big)),
        -l2 * li(3, inv(mul(x, x2))),
        -2 * l1 * li(3, big),
        2 * s(1, 3, inv(x1), big),
        -2 * l2 * li(3, big),
        2 * s(1, 3, inv(x2), big),
        li(2, x1) * li(2, big),
        s(2, 2, inv(x1), big),
        li(2, x2) * li(2, big),
        s(2, 2, inv(x2), big),
        -p0 * (l2 * li(2, big) - s(1, 2, inv(x2), big)),
        -p0 * (l1 * li(2, big) - s(1, 2, inv(x1), big)),
        -l1 * l2 * li(2, big),
        l1 * s(1, 2, inv(x2), big),
        l2 * s(1, 2, inv(x1), big),
        -2 * p0 * li(3, big),
        a2 * li(2, big),
        li(4, x1),
        li(4, x2),
        -l1 * li(3, x2),
        -li(3, x1) * l2,
        -li(2, x1) * li(2, x2),
        li(4, x),
        li(4, inv(x)),
        a2 * l1 * l2,
        p0 * li(2, x1) * l2,
        p0 * l1 * li(2, x2),
        -p0 * li(3, x2),
        -a2 * li(2, x2),
        -p2 * l2,
        -p0 * li(3, x1),
        -a2 * li(2, x1),
        -p2 * l1,
    ]
    return vsum(terms)


def _example_constraints(a: Params) -> list[str]:
    return [
        *nonunit_clause("x1", a["x1"]),
        *nonunit_clause("x2", a["x2"]),
    ]


def _example_122_constraints(a: Params) -> list[str]:
    return nonunit_clause("x1", a["x1"])


# symmetric G-kernel theorem with three unit factors


def _g_symmetric_lhs(ev: Evaluator, a: Params) -> ValueWithError:
    xs = (a["x1"], a["x2"], a["x3"])
    big = mul(*xs)
    return vsum(
        ev.s((1, 1), a["q"], (inv(xs[i]), inv(xs[j])), big)
        for i, j in ((0, 1), (0, 2), (1, 2))
    )


def _g_symmetric_rhs(ev: Evaluator, a: Params) -> ValueWithError:
    q = a["q"]
    xs = (a["x1"], a["x2"], a["x3"])
    big = mul(*xs)
    ls = [ev.li(1, xj) for xj in xs]
    li_big = ev.li(q, big)
    out = vsum(ev.s((1,), q + 1, (inv(xj),), big) for xj in xs) * q
    out += vsum(ev.s((2,), q, (inv(xj),), big) for xj in xs)
    for i, j, k in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
        out += (ls[i] + ls[j]) * ev.s((1,), q, (inv(xs[k]),), big)
    out += vsum(ev.li(q + 2, xj) for xj in xs)
    out -= ev.li(q + 2, big) * (q * (q + 1) / 2)
    out -= vsum(ls) * ev.li(q + 1, big) * q
    out -= (ls[0] * ls[1] + ls[0] * ls[2] + ls[1] * ls[2]) * li_big
    out += vsum(ev.li(2, xj) for xj in xs) * li_big
    for i, j in ((0, 1), (0, 2), (1, 2)):
        out -= vsum(
            ev.li(ki + 1, xs[i]) * ev.li(kj + 1, xs[j])
            for ki, kj in _compositions(q, 2)
        )
    out += vsum(
        ev.li(k1 + 1, xs[0]) * ev.li(k2 + 1, xs[1]) * ev.li(k3 + 1, xs[2])
        for k1, k2, k3 in _compositions(q - 1, 3)
    )
    return out


def _g_symmetric_constraints(a: Params) -> list[str]:
    return [
        *nonunit_clause("x1", a["x1"]),
        *nonunit_clause("x2", a["x2"]),
        *nonunit_clause("x3", a["x3"]),
        *unit_clause(
            "(q,x1x2x3)=(1,1)", a["q"], a["x1"], a["x2"], a["x3"]
        ),
    ]


def _g_equal_lhs(ev: Evaluator, a: Params) -> ValueWithError:
    x = a["x"]
    return ev.s((1, 1), a["q"], (inv(x), inv(x)), mul(x, x, x))


def _g_equal_rhs(ev: Evaluator, a: Params) -> ValueWithError:
    q, x = a["q"], a["x"]
    cube = mul(x, x, x)
    l1 = ev.li(1, x)
    out = ev.s((1,), q + 1, (inv(x),), cube) * q
    out += ev.s((2,), q, (inv(x),), cube)
    out += l1 * ev.s((1,), q, (inv(x),), cube) * 2
    out += ev.li(q + 2, x)
    out -= ev.li(q + 2, cube) * (q * (q + 1) / 6)
    out -= l1 * ev.li(q + 1, cube) * q
    out += ev.li(2, x) * ev.li(q, cube)
    out -= l1 * l1 * ev.li(q, cube)
    out -= vsum(
        ev.li(i + 1, x) * ev.li(j + 1, x) for i, j in _compositions(q, 2)
    )
    out += vsum(
        ev.li(i + 1, x) * ev.li(j + 1, x) * ev.li(k + 1, x)
        for i, j, k in _compositions(q - 1, 3)
    ) * (1 / 3)
    return out


def _g_equal_constraints(a: Params) -> list[str]:
    return [
        *nonunit_clause("x", a["x"]),
        *unit_clause("(q,x^3)=(1,1)", a["q"], a["x"], a["x"], a["x"]),
    ]


# a quadratic sum as multiple polylogarithms


def _chain_lhs(ev: Evaluator, a: Params) -> ValueWithError:
    return ev.s((a["p1"], a["p2"]), a["q"], (a["x1"], a["x2"]), a["x"])


def _chain_rhs(ev: Evaluator, a: Params) -> ValueWithError:
    return ev.terms(
        quadratic_to_mpl_chain(
            a["p1"], a["p2"], a["q"], a["x1"], a["x2"], a["x"]
        )
    )


def _chain_constraints(a: Params) -> list[str]:
    return [
        *unit_clause("(p1,x1)=(1,1)", a["p1"], a["x1"]),
        *unit_clause("(q,x)=(1,1)", a["q"], a["x"]),
    ]


_QUADRATIC_SCHEMA = (
    exponent("p1"),
    exponent("p2"),
    exponent("q"),
    root("x"),
    root("x1"),
    root("x2"),
)


def _example_schema(p1: int, p2: int, q: int):
    return (
        exponent("p1", fixed=p1),
        exponent("p2", fixed=p2),
        exponent("q", fixed=q),
        root("x"),
        root("x1"),
        root("x2"),
    )


QUADRATIC_RECORDS = (
    IdentityRecord(
        id="thm-4.1",
        anchor="(p_1,x_1), (p_2,x_2)$ and $(q,xx_1x_2)\\neq (1,1)",
        title="parity of quadratic sums at roots of unity",
        params_schema=_QUADRATIC_SCHEMA,
        lhs_eval=_parity_lhs,
        rhs_eval=_parity_rhs,
        constraints=_parity_constraints,
    ),
    IdentityRecord(
        id="cor-4.1a",
        anchor="S_{1,1;q}\\left(x_1,x_2;\\left(xx_1x_2\\right)^{-1}\\right)",
        title="parity of S_{1,1;q}",
        params_schema=(exponent("q"), root("x"), root("x1"), root("x2")),
        lhs_eval=_unit_parity_lhs,
        rhs_eval=_unit_parity_rhs,
        constraints=_unit_parity_constraints,
        variants={
            "inverse-args": Reading(
                rhs=partial(_unit_parity_rhs, inverse_args=True)
            )
        },
    ),
    IdentityRecord(
        id="ex-4.1",
        anchor="Setting $\\left(p_1,p_2,q\\right)=\\left(1,2,2\\right)$",
        title="S_{1,2;2} parity, written out",
        params_schema=_example_schema(1, 2, 2),
        lhs_eval=_example_122_lhs,
        rhs_eval=_example_122_rhs,
        constraints=_example_122_constraints,
    ),
    IdentityRecord(
        id="ex-4.2",
        anchor="Setting $\\left(p_1,p_2,q\\right)=\\left(1, 1, 2\\right)$",
        title="S_{1,1;2} parity, written out",
        params_schema=_example_schema(1, 1, 2),
        lhs_eval=_example_112_lhs,
        rhs_eval=_example_112_rhs,
        constraints=_example_constraints,
    ),
    IdentityRecord(
        id="thm-4G",
        anchor=(
            "\\sum_{1\\leq i<j\\leq 3} "
            "S_{1,1;q}\\Big(x_i^{-1},x_j^{-1};x_1x_2x_3\\Big)"
        ),
        title="symmetric sum of S_{1,1;q} at inverse arguments",
        params_schema=(exponent("q"), root("x1"), root("x2"), root("x3")),
        lhs_eval=_g_symmetric_lhs,
        rhs_eval=_g_symmetric_rhs,
        constraints=_g_symmetric_constraints,
    ),
    IdentityRecord(
        id="eq-4.4",
        anchor="S_{1,1;q}\\Big(x^{-1},x^{-1};x^3\\Big)",
        title="S_{1,1;q}(x^{-1},x^{-1};x^3)",
        params_schema=(exponent("q"), root("x")),
        lhs_eval=_g_equal_lhs,
        rhs_eval=_g_equal_rhs,
        constraints=_g_equal_constraints,
    ),
    IdentityRecord(
        id="chain-4",
        anchor=(
            "-\\Li_{p_2,q,p_1}(x_2,x,x_1)-\\Li_{p_2+q,p_1}(x_2x,x_1)"
        ),
        title="a quadratic sum as multiple polylogarithms",
        params_schema=_QUADRATIC_SCHEMA,
        lhs_eval=_chain_lhs,
        rhs_eval=_chain_rhs,
        constraints=_chain_constraints,
    ),
)
