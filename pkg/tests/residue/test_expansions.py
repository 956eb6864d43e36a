import math

import numpy as np
import pytest

import eulersum as es
from eulersum.residue.expansions import HarmonicTable, shift_coefficients


def _cot_coeffs(terms, cfg):
    # pi*cot(pi*h) = 1/h - 2 sum_k zeta(2k) h**(2k-1)
    out = [1 + 0j] + [0j] * terms
    for m in range(1, terms, 2):
        out[m + 1] = -2 * es.zeta(m + 1, cfg).value
    return out


def _csc_coeffs(terms, cfg):
    # pi*csc(pi*h) = 1/h + 2 sum_k eta(2k) h**(2k-1)
    out = [1 + 0j] + [0j] * terms
    for m in range(1, terms, 2):
        out[m + 1] = 2 * es.eta(m + 1, cfg).value
    return out


@pytest.mark.parametrize("n", [0, 1, -2, 5])
def test_big_phi_at_one_is_cotangent(cfg, one, n):
    series = es.big_phi_expansion(n, one, 6, cfg)

    assert series.center == n
    assert series.min_order == -1
    np.testing.assert_allclose(
        series.coeffs, _cot_coeffs(6, cfg), rtol=0, atol=1e-10
    )


@pytest.mark.parametrize("n", [0, 1, 2, -3])
def test_big_phi_at_minus_one_is_cosecant(cfg, minus_one, n):
    series = es.big_phi_expansion(n, minus_one, 6, cfg)

    np.testing.assert_allclose(
        series.coeffs,
        np.array(_csc_coeffs(6, cfg)) * (-1) ** n,
        rtol=0,
        atol=1e-10,
    )


def test_big_phi_interior_raise(cfg, half):
    with pytest.raises(es.DomainError) as exc_info:
        es.big_phi_expansion(1, half, 3, cfg)

    assert "must be a root of unity" in exc_info.value.args[0]


def test_phi_expansion_neg_at_zero(cfg, minus_one):
    series = es.phi_expansion_neg(0, 1, minus_one, 3, cfg)
    li = [es.polylog(m, minus_one, cfg).value for m in (1, 2, 3)]

    assert series.center == 0
    assert series.min_order == -1
    np.testing.assert_allclose(
        series.coeffs, [1, li[0], -li[1], li[2]], rtol=0, atol=1e-14
    )


def test_phi_expansion_neg_principal_part(cfg):
    x = es.root_of_unity(1, 3)
    series = es.phi_expansion_neg(4, 2, x, 2, cfg)

    assert series.min_order == -2
    assert abs(series.coeffs[0] - x.value**4) <= 1e-15
    assert series.coeffs[1] == 0


def test_phi_expansion_pos(cfg, half):
    series = es.phi_expansion_pos(1, 1, half, 2, cfg)

    # psi_1(1; x) = Li_1(x)/x and its derivative -Li_2(x)/x
    assert abs(series.coeffs[0] - 2 * math.log(2)) <= 1e-9
    assert abs(
        series.coeffs[1] + 2 * es.polylog(2, half, cfg).value
    ) <= 1e-9


@pytest.mark.parametrize(
    "n, p, message",
    [
        (-1, 1, "`n` must be nonnegative."),
        (0, 0, "`p` must be a positive integer."),
    ],
)
def test_phi_expansion_neg_raise(cfg, minus_one, n, p, message):
    with pytest.raises(es.DomainError) as exc_info:
        es.phi_expansion_neg(n, p, minus_one, 2, cfg)

    assert message in exc_info.value.args[0]


def test_phi_expansion_pos_raise(cfg, minus_one):
    with pytest.raises(es.DomainError) as exc_info:
        es.phi_expansion_pos(0, 1, minus_one, 2, cfg)

    assert "`n` must be a positive integer." in exc_info.value.args[0]


@pytest.mark.parametrize(
    "x", [es.root_of_unity(1, 4), es.root_of_unity(1, 2), es.Approx(0.6)]
)
def test_harmonic_table(cfg, x):
    table = HarmonicTable(x, 40, cfg)

    for n in (0, 1, 7, 40):
        assert abs(
            table.zeta(2)[n] - es.finite_polylog_sum(n, 2, x)
        ) <= 1e-14
        assert abs(
            table.reflected(2)[n] - es.reflected_finite_sum(n, 2, x)
        ) <= 1e-13
    for n in (1, 7, 40):
        assert abs(
            table.tail(3)[n] - es.shifted_tail(n, 3, x, cfg).value
        ) <= 1e-9


def test_harmonic_table_raise(cfg, one):
    with pytest.raises(es.DomainError) as exc_info:
        HarmonicTable(one, -1, cfg)

    assert "`n_max` must be nonnegative." in exc_info.value.args[0]


def test_table_coverage_raise(cfg, minus_one):
    table = HarmonicTable(minus_one, 3, cfg)

    with pytest.raises(es.DomainError) as exc_info:
        es.phi_expansion_neg(5, 1, minus_one, 2, cfg, table)

    assert "`table` must be built for" in exc_info.value.args[0]


def test_shift_coefficients():
    rows = shift_coefficients(np.array([-1, 2]), 2, 3)

    np.testing.assert_allclose(rows[0], [1, 2, 3])
    np.testing.assert_allclose(rows[1], [0.25, -0.25, 3 / 16])
