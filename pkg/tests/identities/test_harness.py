import logging
import math

import polars as pl
import pytest
from polars.testing import assert_frame_equal

import eulersum as es
from eulersum.identities import harness
from eulersum.identities.harness import (
    BOUNDARY_CHECK_TOL,
    build_catalog,
)
from eulersum.identities.record import IdentityRecord, exponent
from eulersum.identities.terms import Evaluator


@pytest.fixture(scope="module")
def false_interior():
    """A record claiming Li_{2,1}(0.999,0.999) = 4.5, not 8.944."""

    def lhs(ev, a):
        x = es.as_param(0.999)
        return ev.mpl((2, 1), (x, x))

    def rhs(ev, a):
        return es.ValueWithError.exact(4.5)

    return IdentityRecord(
        id="tst-false-interior",
        anchor="",
        title="a false value of Li_{2,1} near the boundary",
        params_schema=(),
        lhs_eval=lhs,
        rhs_eval=rhs,
        boundary=False,
    )


@pytest.fixture(scope="module")
def self_referential():
    """A record whose right-hand side evaluates the left-hand side."""

    def side(ev, a):
        minus_one = es.as_param(-1)
        return ev.s((1,), a["q"], (minus_one,), minus_one)

    return IdentityRecord(
        id="tst-circular",
        anchor="",
        title="S_{1;q}(-1;-1) against itself",
        params_schema=(exponent("q"),),
        lhs_eval=side,
        rhs_eval=side,
    )


@pytest.mark.parametrize("q", [2, 3, 4])
def test_classical_linear_sum(cfg, q):
    report = es.check_identity("eq-3.6", {"q": q}, cfg)

    assert report.passed
    assert report.tol_used == BOUNDARY_CHECK_TOL
    assert report.notes == ""
    assert report.params_text == f"q={q}"


@pytest.mark.parametrize(
    "params",
    [
        {"p": 1, "q": 2, "x": "root:0/1", "y": "root:1/2"},
        {"p": 2, "q": 1, "x": "root:1/2", "y": "root:0/1"},
        {"p": 1, "q": 1, "x": "root:0/1", "y": "root:1/2"},
    ],
)
def test_double_polylog_parity(cfg, params):
    report = es.check_identity("thm-3.1", params, cfg)

    assert report.passed
    assert report.abs_diff <= BOUNDARY_CHECK_TOL


@pytest.mark.slow
def test_unit_pair_sweep(cfg):
    reports = es.sweep_identity("cor-3.3", seed=7, count=20, cfg=cfg)

    assert len(reports) == 20
    assert all(r.passed for r in reports), [
        (r.params_text, r.abs_diff) for r in reports if not r.passed
    ]


def test_sweep_is_seeded(cfg):
    first = es.sweep_identity("eq-3.6", seed=3, count=3, cfg=cfg)
    second = es.sweep_identity("eq-3.6", seed=3, count=3, cfg=cfg)

    assert [r.params for r in first] == [r.params for r in second]
    assert [r.lhs.value for r in first] == [r.lhs.value for r in second]


def test_mirrored_reading(cfg, caplog):
    params = {
        "p1": 1,
        "p2": 1,
        "q": 2,
        "x1": "root:1/2",
        "x2": "root:1/4",
    }
    with caplog.at_level(logging.WARNING):
        report = es.check_identity("thm-3.2", params, cfg)

    assert not report.passed
    assert report.abs_diff > 0.1
    assert report.variants["mirrored-sum-at-x2"] <= BOUNDARY_CHECK_TOL
    assert "default reading leaves" in report.notes
    assert "reading `mirrored-sum-at-x2` vanishes" in report.notes
    assert "vanishes" in caplog.text


@pytest.mark.parametrize(
    "id, params, message",
    [
        (
            "thm-3.1",
            {"p": 1, "q": 1, "x": "root:0/1", "y": "root:0/1"},
            "`thm-3.1` excludes (p,y)=(1,1), (q,xy)=(1,1) at "
            "p=1,q=1,x=root:0/1,y=root:0/1.",
        ),
        ("eq-3.6", {"q": 1}, "`eq-3.6` excludes q=1 at q=1."),
        (
            "cor-3.3",
            {"q": 2, "x1": "root:0/1", "x2": "root:1/2"},
            "x1=1",
        ),
    ],
)
def test_check_identity_divergence_raise(cfg, id, params, message):
    with pytest.raises(es.DivergenceError) as exc_info:
        es.check_identity(id, params, cfg)

    assert message in exc_info.value.args[0]


def test_check_identity_unknown_raise(cfg):
    with pytest.raises(es.UnknownIdentityError) as exc_info:
        es.check_identity("thm-9.9", {}, cfg)

    assert "`thm-9.9` is not a known identity." in exc_info.value.args[0]


def test_sweep_count_raise(cfg):
    with pytest.raises(es.DomainError) as exc_info:
        es.sweep_identity("eq-3.6", seed=0, count=0, cfg=cfg)

    assert "`count` must be a positive integer." in exc_info.value.args[0]


def test_shared_series_fail(cfg, monkeypatch, self_referential):
    monkeypatch.setattr(
        harness, "_catalog", lambda: build_catalog([self_referential])
    )
    report = es.check_identity("tst-circular", {"q": 2}, cfg)

    assert report.abs_diff == 0
    assert not report.passed
    assert "both sides evaluate S|" in report.notes


def test_build_catalog_raise(self_referential):
    with pytest.raises(es.DuplicateIdentityError) as exc_info:
        build_catalog([self_referential, self_referential])

    assert "`tst-circular` is registered twice." in exc_info.value.args[0]


def test_register_builtin():
    ids = [record.id for record in es.register_builtin()]

    assert len(ids) == 19
    assert ids == sorted(ids)
    assert {"thm-3.1", "cor-4.1a", "chain-4", "thm-5.5"} <= set(ids)
    assert all(record.anchor for record in es.register_builtin())


def test_get_identity():
    record = es.get_identity("ex-5.4a")

    assert record.param_names == ()
    assert set(record.variants) == {
        "log-squared-2",
        "eta",
        "eta-log-squared-2",
    }
    assert set(es.get_identity("thm-5.1").variants) == {
        "printed",
        "printed-outer-index",
        "printed-zero-residue-sign",
    }
    assert set(es.get_identity("ex-5.2b").variants) == {
        "printed-product-sign",
        "eta",
    }


def test_catalog_frame():
    df = es.catalog_frame()

    assert df.height == 19
    assert df.columns == ["id", "title", "params", "anchor"]
    row = df.filter(pl.col("id") == "ex-4.1").row(0, named=True)
    assert row["params"] == "x,x1,x2"
    assert df.filter(pl.col("id") == "ex-5.2a")["params"].item() == ""


def test_reports_frame():
    lhs = es.ValueWithError(1 + 2j, 1e-9)
    rhs = es.ValueWithError(1 + 2j, 1e-9)
    report = es.VerificationReport(
        "eq-3.6", {"q": 2}, lhs, rhs, 0.0, 1e-5, True
    )
    result = es.reports_frame([report])
    expected = pl.DataFrame(
        {
            "id": ["eq-3.6"],
            "params": ["q=2"],
            "lhs_re": [1.0],
            "lhs_im": [2.0],
            "rhs_re": [1.0],
            "rhs_im": [2.0],
            "abs_diff": [0.0],
            "tol_used": [1e-5],
            "passed": [True],
            "notes": [""],
        }
    )

    assert_frame_equal(result, expected)


def test_reports_frame_empty():
    df = es.reports_frame([])

    assert df.height == 0
    assert df.schema["passed"] == pl.Boolean


def test_unconverged_side_fail(monkeypatch, false_interior):
    monkeypatch.setattr(
        harness, "_catalog", lambda: build_catalog([false_interior])
    )
    cfg = es.EvalConfig(max_terms=50)
    report = es.check_identity("tst-false-interior", {}, cfg)

    assert not report.passed
    assert "did not converge" in report.notes
    assert report.lhs.terms_used == 50
    # the kept estimate carries the tail bound at 50 terms, not a guess
    assert report.lhs.abs_err > abs(8.944 - report.lhs.value)


@pytest.mark.slow
@pytest.mark.parametrize(
    "id, reading",
    [
        ("thm-3.1", None),
        ("thm-3.2", "mirrored-sum-at-x2"),
        ("eq-3.5", None),
        ("thm-4.1", None),
        ("cor-4.1a", "inverse-args"),
        ("thm-4G", None),
        ("eq-4.4", None),
        ("chain-4", None),
        ("thm-5.1", None),
        ("thm-5G", None),
    ],
)
def test_theorem_sweep(cfg, id, reading):
    reports = es.sweep_identity(id, seed=1, count=20, cfg=cfg)

    assert len(reports) == 20
    # a failure must be one the named reading removes
    failed = [
        r
        for r in reports
        if not r.passed
        and (reading is None or r.variants[reading] > r.tol_used)
    ]
    assert not failed, [(r.params_text, r.abs_diff, r.notes) for r in failed]


def test_cubic_parity_printed_reading(cfg):
    record = es.get_identity("thm-5.1")
    reports = es.sweep_identity("thm-5.1", seed=1, count=3, cfg=cfg)

    for report in reports:
        assert report.passed, report.notes
        for name in record.variants:
            rhs = record.variants[name].rhs(Evaluator(cfg), report.params)
            assert abs(report.lhs.value - rhs.value) > 1e-3, name


@pytest.mark.parametrize("id", ["ex-4.1", "ex-4.2"])
def test_quadratic_examples(cfg, id):
    reports = es.sweep_identity(id, seed=2, count=5, cfg=cfg)

    assert all(r.passed for r in reports), [
        (r.params_text, r.abs_diff) for r in reports if not r.passed
    ]


@pytest.mark.parametrize("id", ["ex-5.2a", "ex-5.2b", "ex-5.4b"])
def test_alternating_examples(cfg, id):
    report = es.check_identity(id, {}, cfg)

    assert report.passed, report.notes
    assert report.abs_diff <= 1e-4


def test_amzv_example_printed_sign(cfg):
    # +6 zeta(bar2) zeta(bar1,bar1) is off by 12 Li_2(-1) Li_{1,1}(-1,-1)
    record = es.get_identity("ex-5.2b")
    ev = Evaluator(cfg)
    lhs = record.lhs_eval(ev, {})
    rhs = record.variants["printed-product-sign"].rhs(Evaluator(cfg), {})
    li2 = -math.pi**2 / 12
    li11 = (math.log(2) ** 2 - math.pi**2 / 6) / 2

    assert abs(rhs.value - lhs.value) == pytest.approx(
        abs(12 * li2 * li11), abs=1e-4
    )


def test_quartic_example_log_reading(cfg):
    report = es.check_identity("ex-5.4a", {}, cfg)

    assert not report.passed
    assert report.abs_diff > 1
    assert report.variants["log-squared-2"] <= report.tol_used
    assert "reading `log-squared-2` vanishes" in report.notes
