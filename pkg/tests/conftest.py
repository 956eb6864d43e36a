import pytest

import eulersum as es
from eulersum.series.memo import MEMO


@pytest.fixture(scope="module")
def cfg():
    return es.EvalConfig()


@pytest.fixture(scope="module")
def one():
    return es.as_param(1)


@pytest.fixture(scope="module")
def minus_one():
    return es.as_param(-1)


@pytest.fixture(scope="module")
def roots():
    """
    Every root of unity of order at most 6, identity first.
    """
    out = []
    for order in range(1, 7):
        for numer in range(order):
            root = es.root_of_unity(numer, order)
            if root not in out:
                out.append(root)
    return out


@pytest.fixture(scope="module")
def half():
    return es.as_param(0.5)


@pytest.fixture
def cold_memo():
    MEMO.clear()
    yield MEMO
    MEMO.clear()
