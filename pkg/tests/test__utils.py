import pytest

from eulersum._utils import (
    _binom,
    _bounded_compositions,
    _compositions,
    _get_unique_name,
)


@pytest.mark.parametrize("n", [10, 11, 12])
def test__get_unique_name(n):
    name1 = _get_unique_name(n)
    name2 = _get_unique_name(n)
    assert name1 != name2
    assert len(name1) == len(name2) == n


def test__get_unique_name_raise():
    with pytest.raises(ValueError) as exc_info:
        _get_unique_name(7)

    assert (
        "`n` must be at least 8 to ensure uniqueness of the name."
        in exc_info.value.args[0]
    )


@pytest.mark.parametrize(
    "n, k, expected",
    [
        (4, 2, 6),
        (4, 0, 1),
        (4, 4, 1),
        (4, 5, 0),
        (-1, 0, 0),
        (3, -1, 0),
    ],
)
def test__binom(n, k, expected):
    assert _binom(n, k) == expected


@pytest.mark.parametrize(
    "total, parts, expected",
    [
        (2, 2, [(0, 2), (1, 1), (2, 0)]),
        (0, 3, [(0, 0, 0)]),
        (3, 1, [(3,)]),
        (0, 0, [()]),
        (1, 0, []),
        (-1, 2, []),
    ],
)
def test__compositions(total, parts, expected):
    assert list(_compositions(total, parts)) == expected


def test__compositions_count():
    # stars and bars
    assert len(list(_compositions(5, 4))) == _binom(8, 3)


def test__bounded_compositions():
    assert list(_bounded_compositions(1, 2)) == [(0, 0), (0, 1), (1, 0)]
