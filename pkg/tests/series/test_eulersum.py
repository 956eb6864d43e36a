import math

import mpmath
import numpy as np
import pytest

import eulersum as es
from eulersum.series.eulersum import _euler_aperiodic, euler_partial_sums

ZETA3 = float(mpmath.zeta(3))


def test_linear_harmonic_sums(cfg, one):
    s2 = es.euler_sum_eval(es.EulerSumSpec((1,), 2, (one,), one), cfg)
    s3 = es.euler_sum_eval(es.EulerSumSpec((1,), 3, (one,), one), cfg)

    assert abs(s2.value - 2 * ZETA3) <= 1e-6 + s2.abs_err
    assert abs(s2.value - 2.4041138) <= 1e-6
    assert abs(s3.value - math.pi**4 / 72) <= 1e-6 + s3.abs_err
    assert s2.accelerated


def test_order_zero_is_polylog(cfg, minus_one):
    v = es.euler_sum_eval(es.EulerSumSpec((), 2, (), minus_one), cfg)

    assert abs(v.value - es.polylog(2, minus_one, cfg).value) <= 1e-15


def test_euler_partial_sums(one):
    spec = es.EulerSumSpec((1,), 2, (one,), one)
    sums = euler_partial_sums(spec, 3)
    # H_1/1 + H_2/4 + H_3/9
    expected = 1 + 1.5 / 4 + (11 / 6) / 9

    assert abs(sums[-1] - expected) <= 1e-15


def test_linear_stuffle_interior(cfg):
    spec = es.EulerSumSpec((2,), 2, (0.5,), 0.4)
    terms = es.stuffle_linear(2, 2, 0.5, 0.4)

    assert len(terms) == 2
    assert abs(
        es.euler_sum_eval(spec, cfg).value
        - es.evaluate_terms(terms, cfg).value
    ) <= 1e-8


def test_linear_stuffle_at_roots(cfg, minus_one):
    i = es.root_of_unity(1, 4)
    spec = es.EulerSumSpec((2,), 2, (i,), minus_one)
    lhs = es.euler_sum_eval(spec, cfg)
    rhs = es.evaluate_terms(es.euler_sum_as_mpls(spec), cfg)

    assert abs(lhs.value - rhs.value) <= 1e-5


def test_quadratic_stuffle_and_chain_interior(cfg):
    args = (1, 2, 2, 0.5, 0.4, 0.6)
    spec = es.EulerSumSpec((1, 2), 2, (0.5, 0.4), 0.6)
    direct = es.euler_sum_eval(spec, cfg).value
    stuffle = es.evaluate_terms(es.stuffle_quadratic(*args), cfg).value
    chain = es.evaluate_terms(es.quadratic_to_mpl_chain(*args), cfg).value

    assert abs(direct - stuffle) <= 1e-7
    assert abs(direct - chain) <= 1e-7


def test_chain_structure(minus_one, one):
    terms = es.quadratic_to_mpl_chain(2, 1, 2, -1, -1, -1)

    assert [t.coeff for t in terms] == [-1, -1, 1, 1]
    assert [[(f.k, f.x) for f in t.factors] for t in terms] == [
        [((1, 2, 2), (minus_one, minus_one, minus_one))],
        [((3, 2), (one, minus_one))],
        [((2,), (minus_one,)), ((1, 2), (minus_one, minus_one))],
        [((2,), (minus_one,)), ((3,), (one,))],
    ]


@pytest.mark.parametrize(
    "args, message",
    [
        ((1, 2, 2, 1, 0.5, 0.5), "the chain needs (p1,x1) != (1,1)."),
        ((2, 2, 1, 0.5, 0.5, 1), "the chain needs (q,x) != (1,1)."),
    ],
)
def test_chain_raise(args, message):
    with pytest.raises(es.DivergenceError) as exc_info:
        es.quadratic_to_mpl_chain(*args)

    assert message in exc_info.value.args[0]


def test_pairs_form_a_multiset(one, minus_one):
    i = es.root_of_unity(1, 4)
    a = es.EulerSumSpec((2, 1), 3, (i, minus_one), one)
    b = es.EulerSumSpec((1, 2), 3, (minus_one, i), one)

    assert a.canonical == b.canonical
    assert a.canonical == "S|1:root:1/2,2:root:1/4|3|root:0/1"
    assert a.order == 2
    assert a.weight == 6


def test_divergence_raise(one):
    with pytest.raises(es.DivergenceError) as exc_info:
        es.EulerSumSpec((2,), 1, (one,), one)

    assert (
        "the Euler sum diverges at (q,x)=(1,1)." in exc_info.value.args[0]
    )


def test_euler_sum_as_mpls_raise(half):
    spec = es.EulerSumSpec((1, 1, 1), 2, (half, half, half), half)

    with pytest.raises(es.DomainError) as exc_info:
        es.euler_sum_as_mpls(spec)

    assert "`spec` must have order one or two." in exc_info.value.args[0]


def test_mpl_term_text(minus_one):
    [term, _] = es.stuffle_linear(2, 1, minus_one, minus_one)

    assert str(term) == "+ Li_{2,1}(root:1/2,root:1/2)"


def test_split_partial_sums(one, minus_one):
    # zeta_n(2;-1) = L - remainder, L = Li_2(-1)
    spec = es.EulerSumSpec((2,), 2, (minus_one,), one)
    limit = -math.pi**2 / 12
    raw = euler_partial_sums(spec, 50)
    rest = euler_partial_sums(spec, 50, [limit])
    li2 = sum(1 / n**2 for n in range(1, 51))

    assert abs(raw[-1] - (rest[-1] + limit * li2)) <= 1e-13


def test_split_tail_without_acceleration(cfg, one, minus_one):
    # after the split the rest decays like n**-4, so its last sample is
    # accurate where the raw sums would be off by about 0.8 / K
    spec = es.EulerSumSpec((2,), 2, (minus_one,), one)
    plain = es.euler_sum_eval(spec, es.EvalConfig(accel_mode="none"))
    fitted = es.euler_sum_eval(spec, cfg)

    assert not plain.accelerated
    assert abs(plain.value - fitted.value) <= 1e-6
    assert abs(
        fitted.value
        - es.evaluate_terms(es.euler_sum_as_mpls(spec), cfg).value
    ) <= 1e-6


def test_conditional_sum_is_extrapolated(minus_one):
    spec = es.EulerSumSpec((1, 2), 1, (minus_one, minus_one), minus_one)
    v = es.euler_sum_eval(spec, es.EvalConfig(accel_mode="none"))

    assert v.accelerated


def test_aperiodic_always_levin(minus_one):
    spec = es.EulerSumSpec((2,), 1, (minus_one,), es.Approx(0.6 + 0.8j))
    plain = _euler_aperiodic(spec, es.EvalConfig(accel_mode="none"), 1e-6)
    fitted = _euler_aperiodic(spec, es.EvalConfig(), 1e-6)

    assert plain.accelerated
    assert plain.terms_used <= 256
    assert plain.value == fitted.value


def _interior_draws(seed, count, size):
    rng = np.random.default_rng(seed)
    radius = rng.uniform(0.1, 0.8, (count, size))
    angle = rng.uniform(0, 2 * np.pi, (count, size))
    exponents = rng.integers(1, 4, (count, 3))
    return exponents, radius * np.exp(1j * angle)


@pytest.mark.slow
def test_linear_stuffle_sweep(cfg):
    exponents, args = _interior_draws(11, 50, 2)
    for (p, q, _), (x, y) in zip(exponents, args):
        p, q, x, y = int(p), int(q), complex(x), complex(y)
        direct = es.euler_sum_eval(es.EulerSumSpec((p,), q, (x,), y), cfg)
        stuffle = es.evaluate_terms(es.stuffle_linear(p, q, x, y), cfg)

        assert abs(direct.value - stuffle.value) <= 1e-6, (p, q, x, y)


@pytest.mark.slow
def test_quadratic_stuffle_sweep(cfg):
    exponents, args = _interior_draws(12, 50, 3)
    for (p1, p2, q), (x1, x2, x) in zip(exponents, args):
        p1, p2, q = int(p1), int(p2), int(q)
        x1, x2, x = complex(x1), complex(x2), complex(x)
        spec = es.EulerSumSpec((p1, p2), q, (x1, x2), x)
        direct = es.euler_sum_eval(spec, cfg)
        stuffle = es.evaluate_terms(
            es.stuffle_quadratic(p1, p2, q, x1, x2, x), cfg
        )

        assert abs(direct.value - stuffle.value) <= 1e-6, spec
