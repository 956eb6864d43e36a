import cmath
import math

import pytest

import eulersum as es
from eulersum.numerics.params import (
    common_period,
    is_one,
    param_order,
    snap_to_root,
)


@pytest.mark.parametrize(
    "a, N, numer, order, value",
    [
        (0, 5, 0, 1, 1 + 0j),
        (2, 4, 1, 2, -1 + 0j),
        (3, 4, 3, 4, -1j),
        (-1, 4, 3, 4, -1j),
        (7, 6, 1, 6, cmath.exp(1j * math.pi / 3)),
    ],
)
def test_root_of_unity(a, N, numer, order, value):
    root = es.root_of_unity(a, N)

    assert (root.numer, root.order) == (numer, order)
    assert abs(root.value - value) <= 2.0**-50


def test_root_of_unity_raise():
    with pytest.raises(es.DomainError) as exc_info:
        es.root_of_unity(1, 0)

    assert "`N` must be a positive integer." in exc_info.value.args[0]


def test_root_of_unity_not_reduced_raise():
    with pytest.raises(es.DomainError) as exc_info:
        es.RootOfUnity(2, 4)

    assert "use `root_of_unity()` to reduce" in exc_info.value.args[0]


@pytest.mark.parametrize(
    "a, N, inverse",
    [
        (1, 2, (1, 2)),
        (1, 4, (3, 4)),
        (0, 1, (0, 1)),
        (2, 5, (3, 5)),
    ],
)
def test_param_inverse_root(a, N, inverse):
    root = es.root_of_unity(a, N)
    inv = es.param_inverse(root)

    assert isinstance(inv, es.RootOfUnity)
    assert (inv.numer, inv.order) == inverse
    assert es.param_product([root, inv]).is_one()


def test_param_inverse_approx():
    inv = es.param_inverse(es.Approx(0.6 + 0.8j))

    assert isinstance(inv, es.Approx)
    assert abs(inv.z - (0.6 - 0.8j)) <= 2.0**-40


def test_param_inverse_interior_raise():
    with pytest.raises(es.DomainError) as exc_info:
        es.param_inverse(es.Approx(0.5))

    assert "must lie on the unit circle" in exc_info.value.args[0]


def test_approx_outside_disk_raise():
    with pytest.raises(es.DomainError) as exc_info:
        es.Approx(1.5)

    assert "closed unit disk" in exc_info.value.args[0]


def test_approx_representation_noise():
    assert es.Approx(1 + 2.0**-45).is_one()
    assert is_one(es.Approx(1 + 1e-13))
    assert not es.Approx(0.999).is_one()


def test_param_product_order_divides_lcm():
    product = es.param_product(
        [es.root_of_unity(1, 4), es.root_of_unity(1, 6)]
    )

    assert isinstance(product, es.RootOfUnity)
    assert math.lcm(4, 6) % product.order == 0
    assert (product.numer, product.order) == (5, 12)


def test_param_product_mixed():
    product = es.param_product([es.root_of_unity(1, 2), es.Approx(0.5)])

    assert isinstance(product, es.Approx)
    assert abs(product.z + 0.5) <= 1e-15


@pytest.mark.parametrize(
    "obj, expected",
    [
        (1, es.root_of_unity(0, 1)),
        (-1, es.root_of_unity(1, 2)),
        ("root:3/4", es.root_of_unity(3, 4)),
        (es.root_of_unity(1, 3), es.root_of_unity(1, 3)),
    ],
)
def test_as_param_exact(obj, expected):
    assert es.as_param(obj) == expected


def test_as_param_float():
    assert es.as_param(0.5) == es.Approx(0.5)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("root:3/4", es.root_of_unity(3, 4)),
        ("root:2/4", es.root_of_unity(1, 2)),
        ("root:-1/3", es.root_of_unity(2, 3)),
        ("c:0.6-0.8i", es.Approx(0.6 - 0.8j)),
        ("c:-1+0i", es.Approx(-1 + 0j)),
    ],
)
def test_parse_param(text, expected):
    assert es.parse_param(text) == expected


@pytest.mark.parametrize("text", ["root:1", "c:abc", "1/2", "c:2+0i"])
def test_parse_param_raise(text):
    with pytest.raises(es.DomainError):
        es.parse_param(text)


@pytest.mark.parametrize(
    "param",
    [
        es.root_of_unity(0, 1),
        es.root_of_unity(5, 6),
        es.Approx(0.6 - 0.8j),
        es.Approx(-0.25 + 0j),
    ],
)
def test_format_param_parses_back(param):
    assert es.parse_param(es.format_param(param)) == param


def test_snap_to_root():
    assert snap_to_root(es.Approx(-1 + 0j)) == es.root_of_unity(1, 2)
    assert snap_to_root(es.Approx(1j)) == es.root_of_unity(1, 4)
    assert snap_to_root(es.Approx(0.5)) is None
    assert snap_to_root(es.Approx(cmath.exp(1j))) is None


def test_param_order():
    assert param_order(es.root_of_unity(1, 6)) == 6
    assert param_order(es.Approx(0.5)) is None


@pytest.mark.parametrize(
    "params, period",
    [
        ([es.root_of_unity(1, 4), es.root_of_unity(1, 6)], 12),
        ([es.root_of_unity(1, 2), es.Approx(0.5)], 2),
        ([es.Approx(0.3)], 1),
        ([es.root_of_unity(1, 2), es.Approx(cmath.exp(1j))], None),
    ],
)
def test_common_period(params, period):
    assert common_period(params) == period
