"""
Cubic and higher sums: the parity of `S_{1,1,1;q}`, the quartic G-kernel
theorem, their alternating worked examples and the order-`r` parity
decomposition.
"""

from __future__ import annotations

from functools import partial

from .._utils import _binom, _bounded_compositions, _compositions
from ..numerics.params import as_param
from ..numerics.values import ValueWithError, vsum
from ..residue.kernels import KernelSpec
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

__all__ = ["CUBIC_RECORDS"]

# truncation of the residue sweep behind the order-r record
PARITY_N_MAX = 4096

_CYCLIC = ((0, 1, 2), (0, 2, 1), (1, 2, 0))
_LEADING = ((0, 1, 2), (1, 0, 2), (2, 0, 1))
_PAIRS = ((1, 2), (0, 1), (0, 2))
_ORDERED_PAIRS = ((1, 2), (0, 2), (0, 1), (2, 1), (2, 0), (1, 0))


def _unit_cubic_lhs(ev: Evaluator, a: Params) -> ValueWithError:
    q = a["q"]
    xs = (a["x1"], a["x2"], a["x3"])
    big = mul(a["x"], *xs)
    return ev.s((1, 1, 1), q, xs, inv(big)) + ev.s(
        (1, 1, 1), q, tuple(inv(xj) for xj in xs), big
    ) * (-1) ** q


def _unit_cubic_rhs(
    ev: Evaluator,
    a: Params,
    printed_outer: bool = False,
    printed_sign: bool = False,
) -> ValueWithError:
    # the printed statement takes x_3, x_3, x_2 as the outer factors of the
    # S_{1,1;q+1} terms and drops (-1)**k3 from the last sum; the residues
    # at s = n and s = 0 give every x_i once and the full sign
    q, x = a["q"], a["x"]
    xs = (a["x1"], a["x2"], a["x3"])
    big = mul(x, *xs)
    ibig = inv(big)
    sq = (-1) ** q
    ls = [ev.li(1, xj) for xj in xs]
    l123 = ls[0] * ls[1] * ls[2]
    p0 = ev.pair(0, x)

    def lk(k, j):
        return ev.li(k + 1, xs[j])

    def s1(p, qq, j):
        return ev.s((p,), qq, (inv(xs[j]),), big)

    out = l123 * ev.li(q, ibig) + l123 * ev.li(q, big) * sq
    for i, j, k in _CYCLIC:
        out -= (
            ls[i]
            * ls[j]
            * (
                ev.s((1,), q, (xs[k],), ibig)
                - ev.li(q + 1, mul(xs[k], ibig))
            )
        )
    for i, j, k in _LEADING:
        out += ls[i] * (
            ev.s((1, 1), q, (xs[j], xs[k]), ibig)
            - ev.s((1,), q + 1, (xs[j],), mul(xs[k], ibig))
            - ev.s((1,), q + 1, (xs[k],), mul(xs[j], ibig))
            + ev.li(q + 2, mul(xs[j], xs[k], ibig))
        )
        if printed_outer:
            out += ev.s((1, 1), q + 1, (xs[i], xs[j]), mul(xs[k], ibig))
        else:
            out += ev.s((1, 1), q + 1, (xs[j], xs[k]), mul(xs[i], ibig))
        out -= ev.s((1,), q + 2, (xs[i],), mul(xs[j], xs[k], ibig))
    out += ev.li(q + 3, big) * (sq * _binom(q + 2, 3))
    out += ev.li(q + 3, inv(x))
    for j in range(3):
        for k in range(3):
            c = _binom(q - k + 1, q - 1)
            out += lk(k, j) * ev.li(q - k + 2, big) * (c * (-1) ** (k + q))
            out -= s1(k + 1, q - k + 2, j) * (c * sq)
    for i, j in _PAIRS:
        for k1, k2 in _bounded_compositions(1, 2):
            c = _binom(q - k1 - k2, q - 1)
            m = q - k1 - k2 + 1
            out += (
                lk(k1, i)
                * lk(k2, j)
                * ev.li(m, big)
                * (c * (-1) ** (k1 + k2 + q))
            )
            out += (
                lk(k1, i) * s1(k2 + 1, m, j) * (-1) ** (k1 + q + 1)
                + lk(k2, j) * s1(k1 + 1, m, i) * (-1) ** (k2 + q + 1)
            ) * c
            out += ev.s(
                (k1 + 1, k2 + 1), m, (inv(xs[i]), inv(xs[j])), big
            ) * (c * sq)
    for i, j, k in _CYCLIC:
        out -= ls[i] * ls[j] * s1(1, q, k) * sq
    for i, j, k in _LEADING:
        out += (
            ls[i] * ev.s((1, 1), q, (inv(xs[j]), inv(xs[k])), big) * sq
        )
    for j in range(3):
        for k1, k2 in _bounded_compositions(1, 2):
            c = _binom(q - k1 - k2, q - 1)
            m = q - k1 - k2 + 1
            out += (
                ev.pair(k1, x)
                * lk(k2, j)
                * ev.li(m, big)
                * (c * (-1) ** (k2 + q))
            )
            out -= ev.pair(k1, x) * s1(k2 + 1, m, j) * (c * sq)
    for i, j in ((1, 2), (0, 2), (0, 1)):
        out += p0 * ls[i] * ls[j] * ev.li(q, big) * sq
        out += (
            p0
            * ev.s((1, 1), q, (inv(xs[i]), inv(xs[j])), big)
            * sq
        )
    for i, j in _ORDERED_PAIRS:
        out -= p0 * ls[i] * s1(1, q, j) * sq
    out += vsum(
        ev.pair(k, x) * ev.li(q - k + 2, big) * _binom(q - k + 1, q - 1)
        for k in range(3)
    ) * sq
    out += ev.li(q + 3, x) * sq - ev.li(q + 3, inv(x))
    out += vsum(ev.li(q + 3, xj) for xj in xs) * sq
    out += vsum(
        lk(k1, 0) * lk(k2, 1) * lk(k3, 2)
        for k1, k2, k3 in _compositions(q, 3)
    ) * sq
    for i, j in ((0, 1), (0, 2), (1, 2)):
        out -= vsum(
            lk(k1, i) * lk(k2, j) for k1, k2 in _compositions(q + 1, 2)
        ) * sq
    for j in range(3):
        out += vsum(
            lk(k1, j) * ev.pair(k2, x) * (-1) ** k1
            for k1, k2 in _compositions(q + 1, 2)
        )
    for i, j in ((0, 1), (0, 2), (1, 2)):
        out += vsum(
            lk(k1, i) * lk(k2, j) * ev.pair(k3, x) * (-1) ** (k1 + k2)
            for k1, k2, k3 in _compositions(q, 3)
        )
    out += vsum(
        lk(k1, 0)
        * lk(k2, 1)
        * lk(k3, 2)
        * ev.pair(k4, x)
        * (-1) ** (k1 + k2 + (0 if printed_sign else k3))
        for k1, k2, k3, k4 in _compositions(q - 1, 4)
    )
    return out


def _unit_cubic_constraints(a: Params) -> list[str]:
    return [
        *nonunit_clause("x1", a["x1"]),
        *nonunit_clause("x2", a["x2"]),
        *nonunit_clause("x3", a["x3"]),
        *unit_clause(
            "(q,xx1x2x3)=(1,1)", a["q"], a["x"], a["x1"], a["x2"], a["x3"]
        ),
    ]


# quartic G-kernel theorem, rearranged around its order-three sums

_TRIPLES = ((1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2))
_QUARTIC_PAIRS = ((2, 3), (1, 3), (1, 2), (0, 3), (0, 1), (0, 2))
_TWO_AND_ONE = (
    (1, 2, 3),
    (0, 2, 3),
    (0, 1, 3),
    (0, 1, 2),
    (1, 3, 2),
    (0, 3, 2),
    (0, 3, 1),
    (0, 2, 1),
    (2, 3, 1),
    (2, 3, 0),
    (1, 3, 0),
    (1, 2, 0),
)
_ONE_AND_TWO = (
    (1, 2, 3),
    (0, 2, 3),
    (0, 1, 3),
    (0, 1, 2),
    (2, 1, 3),
    (2, 0, 3),
    (1, 0, 3),
    (1, 0, 2),
    (3, 1, 2),
    (3, 0, 2),
    (3, 0, 1),
    (2, 0, 1),
)


def _quartic_args(a: Params):
    xs = (a["x1"], a["x2"], a["x3"], a["x4"])
    return xs, mul(*xs)


def _quartic_lhs(ev: Evaluator, a: Params) -> ValueWithError:
    xs, big = _quartic_args(a)
    return vsum(
        ev.s((1, 1, 1), a["q"], tuple(inv(xs[j]) for j in t), big)
        for t in _TRIPLES
    ) * (-1) ** a["q"]


def _quartic_rhs(ev: Evaluator, a: Params) -> ValueWithError:
    q = a["q"]
    xs, big = _quartic_args(a)
    sq = (-1) ** q
    ls = [ev.li(1, xj) for xj in xs]

    def lk(k, j):
        return ev.li(k + 1, xs[j])

    def s1(p, qq, j):
        return ev.s((p,), qq, (inv(xs[j]),), big)

    out = ev.li(q + 3, big) * (sq * _binom(q + 2, 3))
    for j in range(4):
        for k in range(3):
            out += (
                lk(k, j) * ev.li(q - k + 2, big) * (-1) ** k
                - s1(k + 1, q - k + 2, j)
            ) * (sq * _binom(q - k + 1, q - 1))
    for i, j in _QUARTIC_PAIRS:
        for k1, k2 in _bounded_compositions(1, 2):
            c = _binom(q - k1 - k2, q - 1) * sq
            m = q - k1 - k2 + 1
            out += (
                lk(k1, i) * lk(k2, j) * ev.li(m, big) * (c * (-1) ** (k1 + k2))
            )
            out += (
                lk(k1, i) * s1(k2 + 1, m, j) * (-1) ** (k1 + 1)
                + lk(k2, j) * s1(k1 + 1, m, i) * (-1) ** (k2 + 1)
            ) * c
            out += (
                ev.s((k1 + 1, k2 + 1), m, (inv(xs[i]), inv(xs[j])), big) * c
            )
    for i, j, k in _TRIPLES:
        out += ls[i] * ls[j] * ls[k] * ev.li(q, big) * sq
    for i, j, k in _TWO_AND_ONE:
        out -= ls[i] * ls[j] * s1(1, q, k) * sq
    for i, j, k in _ONE_AND_TWO:
        out += (
            ls[i] * ev.s((1, 1), q, (inv(xs[j]), inv(xs[k])), big) * sq
        )
    out += vsum(ev.li(q + 3, xj) for xj in xs) * sq
    for i, j in _QUARTIC_PAIRS:
        out -= vsum(
            lk(k1, i) * lk(k2, j) for k1, k2 in _compositions(q + 1, 2)
        ) * sq
    for i, j, k in _TRIPLES:
        out += vsum(
            lk(k1, i) * lk(k2, j) * lk(k3, k)
            for k1, k2, k3 in _compositions(q, 3)
        ) * sq
    out -= vsum(
        lk(k1, 0) * lk(k2, 1) * lk(k3, 2) * lk(k4, 3)
        for k1, k2, k3, k4 in _compositions(q - 1, 4)
    ) * sq
    return out


def _quartic_constraints(a: Params) -> list[str]:
    return [
        *(
            clause
            for name in ("x1", "x2", "x3", "x4")
            for clause in nonunit_clause(name, a[name])
        ),
        *unit_clause(
            "(q,x1x2x3x4)=(1,1)",
            a["q"],
            a["x1"],
            a["x2"],
            a["x3"],
            a["x4"],
        ),
    ]


# alternating worked examples; zeta(bar k) is Li_k(-1) and log 2 = -Li_1(-1)

_M1 = as_param(-1)
_P1 = as_param(1)


def _triple_example_lhs(ev: Evaluator, a: Params) -> ValueWithError:
    def s(p, q, outer):
        return ev.s(p, q, (_M1,) * len(p), outer)

    return (
        3 * s((1, 2), 1, _M1)
        + 3 * s((2, 1), 1, _M1)
        - 3 * s((1, 1), 2, _P1)
        + 3 * s((1, 1), 2, _M1)
    )


def _triple_example_rhs(ev: Evaluator, a: Params) -> ValueWithError:
    z, log2 = ev.zeta, ev.log2()

    def s(p, q, outer):
        return ev.s((p,), q, (_M1,), outer)

    terms = [
        3 * log2 * log2 * z("2"),
        6 * log2 * s(1, 2, _P1),
        -4 * z("bar4"),
        -z("4"),
        6 * z("bar2") * z("bar2"),
        -3 * log2 * z("bar3"),
        3 * s(2, 2, _M1),
        3 * s(3, 1, _M1),
        -6 * log2 * s(1, 2, _M1),
        -6 * z("bar2") * s(1, 1, _M1),
        -6 * log2 * s(2, 1, _M1),
        -6 * z("2") * s(1, 1, _M1),
        8 * z("bar2") * z("2"),
    ]
    return vsum(terms)


def _triple_amzv_lhs(ev: Evaluator, a: Params) -> ValueWithError:
    z = ev.zeta
    return (
        6 * z("bar2,bar1,bar1")
        + 6 * z("bar1,bar2,bar1")
        + 6 * z("bar1,bar1,bar2")
        - 6 * z("bar1,bar1,2")
    )


def _triple_amzv_rhs(
    ev: Evaluator, a: Params, printed_sign: bool = False
) -> ValueWithError:
    # the stuffle of S_{1;1}(-1;-1) gives -6 zeta(bar2) zeta(bar1,bar1);
    # the printed statement has +6
    z, log2 = ev.zeta, ev.log2()
    sign = 1 if printed_sign else -1
    terms = [
        6 * z("bar1,bar3"),
        8 * z("4"),
        6 * z("bar2") * z("bar2"),
        3 * z("bar2,bar2"),
        -6 * log2 * z("bar1,bar2"),
        -12 * log2 * z("3"),
        -6 * log2 * z("bar2,bar1"),
        sign * 6 * z("bar2") * z("bar1,bar1"),
        -6 * z("bar2") * z("2"),
        -3 * z("2,bar2"),
        -6 * z("3,bar1"),
        -6 * z("bar2,2"),
        -12 * z("bar1,3"),
        3 * log2 * log2 * z("2"),
        6 * log2 * z("bar1,2"),
        9 * log2 * z("bar3"),
        3 * z("bar3,bar1"),
        3 * z("2,2"),
        -6 * z("2") * z("bar1,bar1"),
        -6 * z("2") * z("2"),
        8 * z("2") * z("bar2"),
        -13 * z("bar4"),
        -6 * log2 * z("bar3"),
    ]
    return vsum(terms)


def _quartic_example_lhs(ev: Evaluator, a: Params) -> ValueWithError:
    return 2 * ev.s((1, 1, 1), 2, (_M1, _M1, _M1), _P1)


def _quartic_example_rhs(
    ev: Evaluator, a: Params, log_minus_one: bool = True
) -> ValueWithError:
    z, log2 = ev.zeta, ev.log2()
    log_sq = ev.log_minus_one_squared() if log_minus_one else log2 * log2

    def s(p, q):
        return ev.s(p, q, (_M1,) * len(p), _P1)

    terms = [
        6 * s((1, 1), 3),
        3 * s((2, 1), 2),
        3 * s((1, 2), 2),
        2 * z("5"),
        -6 * log2 * z("4"),
        -6 * s((1,), 4),
        -4 * z("3") * z("bar2"),
        -4 * s((2,), 3),
        2 * z("bar3") * z("2"),
        -2 * s((3,), 2),
        6 * log2 * log2 * z("3"),
        6 * z("bar2") * z("2") * log2,
        12 * log2 * s((1,), 3),
        6 * z("bar2") * s((1,), 2),
        6 * log2 * s((2,), 2),
        -2 * log2 * log2 * log2 * z("2"),
        -6 * log_sq * s((1,), 2),
        -6 * log2 * s((1, 1), 2),
        2 * z("bar5"),
        6 * z("bar4") * log2,
        -6 * z("bar2") * z("bar3"),
        6 * z("bar3") * log2 * log2,
        -6 * z("bar2") * z("bar2") * log2,
        2 * z("bar2") * log2 * log2 * log2,
    ]
    return vsum(terms)


def _quartic_amzv_lhs(ev: Evaluator, a: Params) -> ValueWithError:
    return 6 * ev.zeta("bar1,bar1,bar1,2")


def _quartic_amzv_rhs(ev: Evaluator, a: Params) -> ValueWithError:
    z, log2 = ev.zeta, ev.log2()
    log_sq, log_cube = log2 * log2, log2 * log2 * log2
    terms = [
        -6 * log2 * z("4"),
        -6 * z("bar1,4"),
        -2 * z("bar2") * z("3"),
        -2 * z("bar2,3"),
        -6 * z("bar5"),
        z("bar3") * z("2"),
        -2 * z("bar3,2"),
        3 * log_sq * z("3"),
        6 * log2 * z("bar1,3"),
        6 * z("bar1,bar1,3"),
        3 * z("2,3"),
        3 * z("bar2") * z("2") * log2,
        3 * z("bar2") * z("bar1,2"),
        3 * log2 * z("bar2,2"),
        12 * log2 * z("bar4"),
        3 * z("bar2,bar1,2"),
        3 * z("bar1,bar2,2"),
        3 * z("3,2"),
        3 * z("bar2,bar3"),
        9 * z("bar1,bar4"),
        7 * z("5"),
        -log_cube * z("2"),
        -3 * log_sq * z("bar1,2"),
        -6 * log2 * z("bar1,bar1,2"),
        -3 * log2 * z("2,2"),
        -6 * log2 * z("bar1,bar3"),
        -3 * z("2,bar1,2"),
        -3 * z("bar1,2,2"),
        -6 * z("bar1,bar1,bar3"),
        -3 * z("2,bar3"),
        -3 * log2 * z("bar2") * z("bar2"),
        log_cube * z("bar2"),
    ]
    return vsum(terms)


_ETA = Reading(eta_reading=True)


# order-r parity through the residue engine


def _parity_kernel(a: Params) -> KernelSpec:
    r = a["r"]
    names = ("1", "2", "3")[:r]
    return KernelSpec(
        "F",
        tuple(a[f"p{j}"] for j in names),
        a["q"],
        tuple(a[f"x{j}"] for j in names),
        a["x"],
    )


def _order_r_lhs(ev: Evaluator, a: Params) -> ValueWithError:
    parts = ev.decompose(_parity_kernel(a), PARITY_N_MAX)
    return parts.order_r_forward + parts.order_r_mirror


def _order_r_rhs(ev: Evaluator, a: Params) -> ValueWithError:
    parts = ev.decompose(_parity_kernel(a), PARITY_N_MAX)
    return -parts.lower_order_remainder


def _order_r_constraints(a: Params) -> list[str]:
    r = a["r"]
    used = ("1", "2", "3")[:r]
    clauses = []
    for j in used:
        clauses += unit_clause(f"(p{j},x{j})=(1,1)", a[f"p{j}"], a[f"x{j}"])
    clauses += unit_clause(
        "(q,xx1...xr)=(1,1)",
        a["q"],
        a["x"],
        *(a[f"x{j}"] for j in used),
    )
    return clauses


CUBIC_RECORDS = (
    IdentityRecord(
        id="thm-5.1",
        anchor=(
            "S_{1,1,1;q}\\left(x_1,x_2,x_3;\\frac{1}{xx_1x_2x_3}\\right)"
        ),
        title="parity of S_{1,1,1;q} at roots of unity",
        params_schema=(
            exponent("q"),
            root("x"),
            root("x1"),
            root("x2"),
            root("x3"),
        ),
        lhs_eval=_unit_cubic_lhs,
        rhs_eval=_unit_cubic_rhs,
        constraints=_unit_cubic_constraints,
        variants={
            "printed": Reading(
                rhs=partial(
                    _unit_cubic_rhs, printed_outer=True, printed_sign=True
                )
            ),
            "printed-outer-index": Reading(
                rhs=partial(_unit_cubic_rhs, printed_outer=True)
            ),
            "printed-zero-residue-sign": Reading(
                rhs=partial(_unit_cubic_rhs, printed_sign=True)
            ),
        },
    ),
    IdentityRecord(
        id="ex-5.2a",
        anchor="3S_{1,2;1}(-1,-1;-1)+3S_{2,1;1}(-1,-1;-1)",
        title="alternating cubic example, Euler-sum form",
        params_schema=(),
        lhs_eval=_triple_example_lhs,
        rhs_eval=_triple_example_rhs,
        variants={"eta": _ETA},
    ),
    IdentityRecord(
        id="ex-5.2b",
        anchor=(
            "6\\zeta(\\bar{2},\\bar{1},\\bar{1})"
            "+6\\zeta(\\bar{1},\\bar{2},\\bar{1})"
        ),
        title="alternating cubic example, multiple zeta form",
        params_schema=(),
        lhs_eval=_triple_amzv_lhs,
        rhs_eval=_triple_amzv_rhs,
        variants={
            "printed-product-sign": Reading(
                rhs=partial(_triple_amzv_rhs, printed_sign=True)
            ),
            "eta": _ETA,
        },
    ),
    IdentityRecord(
        id="thm-5G",
        anchor="(-1)^q\\binom{q+2}{3}\\Li_{q+3}\\left(x_1x_2x_3x_4\\right)",
        title="quartic G-kernel theorem for S_{1,1,1;q}",
        params_schema=(
            exponent("q"),
            root("x1"),
            root("x2"),
            root("x3"),
            root("x4"),
        ),
        lhs_eval=_quartic_lhs,
        rhs_eval=_quartic_rhs,
        constraints=_quartic_constraints,
    ),
    IdentityRecord(
        id="ex-5.4a",
        anchor="2S_{1,1,1;2}\\left(-1,-1,-1;1\\right)",
        title="alternating quartic example, Euler-sum form",
        params_schema=(),
        lhs_eval=_quartic_example_lhs,
        rhs_eval=_quartic_example_rhs,
        variants={
            "log-squared-2": Reading(
                rhs=partial(_quartic_example_rhs, log_minus_one=False)
            ),
            "eta": _ETA,
            "eta-log-squared-2": Reading(
                rhs=partial(_quartic_example_rhs, log_minus_one=False),
                eta_reading=True,
            ),
        },
    ),
    IdentityRecord(
        id="ex-5.4b",
        anchor="6\\zeta(\\bar{1},\\bar{1},\\bar{1},2)",
        title="alternating quartic example, multiple zeta form",
        params_schema=(),
        lhs_eval=_quartic_amzv_lhs,
        rhs_eval=_quartic_amzv_rhs,
        variants={"eta": _ETA},
    ),
    IdentityRecord(
        id="thm-5.5",
        anchor="reduces to a combination of sums of lower orders",
        title="order-r parity through the residue engine",
        params_schema=(
            exponent("r", high=3),
            exponent("p1", high=2),
            exponent("p2", high=2),
            exponent("p3", high=2),
            exponent("q", high=3),
            root("x"),
            root("x1"),
            root("x2"),
            root("x3"),
        ),
        lhs_eval=_order_r_lhs,
        rhs_eval=_order_r_rhs,
        constraints=_order_r_constraints,
    ),
)
