import json
import math

import pytest

from eulersum.cli.main import build_parser, main

ZETA3 = 1.2020569031595942


def _run_json(capsys, *argv):
    code = main([*argv, "--no-cache", "--json"])
    return code, json.loads(capsys.readouterr().out)


def test_eval_polylog(capsys):
    code, doc = _run_json(
        capsys, "eval", "polylog", "--p", "2", "--x", "c:-1+0i"
    )

    assert code == 0
    value = doc["results"][0]["value"]
    assert value["re"] == pytest.approx(-(math.pi**2) / 12, abs=1e-10)
    assert value["im"] == pytest.approx(0.0, abs=1e-10)
    assert (doc["passed"], doc["failed"]) == (1, 0)
    assert doc["config"]["cache"] is None


def test_eval_polylog_text(capsys):
    code = main(
        ["eval", "polylog", "--p", "2", "--x", "root:1/2", "--no-cache"]
    )
    out = capsys.readouterr().out

    assert code == 0
    assert "-0.8224670334" in out
    assert "1/1 ok" in out


def test_eval_eulersum(capsys):
    code, doc = _run_json(
        capsys,
        "eval",
        "eulersum",
        "--p",
        "1",
        "--q",
        "2",
        "--xs",
        "root:0/1",
        "--x",
        "root:0/1",
    )

    assert code == 0
    assert doc["results"][0]["value"]["re"] == pytest.approx(
        2 * ZETA3, abs=1e-5
    )


def test_eval_zetan(capsys):
    code, doc = _run_json(
        capsys, "eval", "zetan", "--n", "3", "--p", "1", "--x", "root:0/1"
    )

    assert code == 0
    assert doc["results"][0]["value"]["re"] == pytest.approx(11 / 6)
    assert doc["results"][0]["terms_used"] == 3


def test_eval_amzv_echoes_indices(capsys):
    code, doc = _run_json(capsys, "eval", "amzv", "--idx", "1,bar2")

    assert code == 0
    assert doc["results"][0]["indices"] == {
        "k": [1, 2],
        "x": ["root:0/1", "root:1/2"],
    }


def test_identity_list(capsys):
    code, doc = _run_json(capsys, "identity", "list")

    assert code == 0
    assert len(doc["results"]) == 19
    assert doc["results"][0].keys() == {"id", "title", "params", "anchor"}


def test_identity_check(capsys):
    code, doc = _run_json(
        capsys, "identity", "check", "--id", "eq-3.6", "--params", "q=3"
    )

    assert code == 0
    result = doc["results"][0]
    assert result["id"] == "eq-3.6"
    assert result["params"] == "q=3"
    assert result["pass"]
    assert result["tol_used"] == 1e-5


def test_identity_check_text(capsys):
    code = main(
        [
            "identity",
            "check",
            "--id",
            "eq-3.6",
            "--params",
            "q=2",
            "--no-cache",
        ]
    )
    out = capsys.readouterr().out

    assert code == 0
    assert out.startswith("eq-3.6(q=2): |lhs - rhs| = ")
    assert "pass" in out


def test_identity_check_failure_exits_one(capsys):
    code, doc = _run_json(
        capsys,
        "identity",
        "check",
        "--id",
        "thm-3.2",
        "--params",
        "p1=1,p2=1,q=2,x1=root:1/2,x2=root:1/4",
    )

    assert code == 1
    assert doc["failed"] == 1
    assert "mirrored-sum-at-x2" in doc["results"][0]["variants"]


def test_identity_sweep(capsys):
    code, doc = _run_json(
        capsys,
        "identity",
        "sweep",
        "--id",
        "eq-3.6",
        "--seed",
        "4",
        "--count",
        "2",
    )

    assert code == 0
    assert len(doc["results"]) == 2
    assert doc["terms_summed"] >= 0


def test_residue_check(capsys):
    code, doc = _run_json(
        capsys,
        "residue",
        "check",
        "--kernel",
        "G",
        "--p",
        "1,1",
        "--q",
        "3",
        "--xs",
        "c:0.7+0i,c:0.5+0i",
        "--nmax",
        "300",
    )

    assert code == 0
    result = doc["results"][0]
    assert result["pass"]
    assert result["n_max"] == 300
    assert abs(result["total"]["re"]) <= 1e-8


def test_residue_decompose(capsys):
    code, doc = _run_json(
        capsys,
        "residue",
        "decompose",
        "--kernel",
        "F",
        "--p",
        "1,1",
        "--q",
        "2",
        "--xs",
        "root:1/2,root:1/2",
        "--x",
        "root:1/2",
    )

    assert code == 0
    assert doc["results"][0]["pass"]
    assert doc["results"][0]["residual"] <= 1e-5


@pytest.mark.parametrize(
    "argv, message",
    [
        (
            ["identity", "check", "--id", "thm-9.9"],
            "`thm-9.9` is not a known identity.",
        ),
        (
            ["identity", "check", "--id", "eq-3.6", "--params", "q=1"],
            "`eq-3.6` excludes q=1",
        ),
        (
            ["identity", "check", "--id", "eq-3.6", "--params", "q=x"],
            "`q` must be an integer",
        ),
        (
            ["eval", "polylog", "--p", "1", "--x", "root:0/1"],
            "eulersum: error:",
        ),
        (
            [
                "residue",
                "check",
                "--kernel",
                "F",
                "--p",
                "1",
                "--q",
                "1",
                "--xs",
                "root:0/1",
                "--x",
                "root:0/1",
            ],
            "diverges",
        ),
        (
            ["identity", "sweep", "--id", "eq-3.6", "--count", "0"],
            "`count` must be a positive integer.",
        ),
    ],
)
def test_usage_errors_exit_two(capsys, argv, message):
    code = main([*argv, "--no-cache"])

    assert code == 2
    assert message in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["eval", "polylog", "--p", "two", "--x", "root:0/1"],
        ["eval", "polylog", "--p", "2", "--x", "nowhere"],
        ["eval", "mpl", "--k", "1,x", "--xs", "root:0/1"],
        ["identity", "check", "--id", "eq-3.6", "--params", "q"],
        ["frobnicate"],
    ],
)
def test_parser_errors_exit_two(capsys, argv):
    assert main([*argv, "--no-cache"]) == 2


def test_version(capsys):
    assert main(["--version"]) == 0
    assert capsys.readouterr().out.startswith("eulersum ")


def test_parser_shares_flags():
    args = build_parser().parse_args(
        ["eval", "polylog", "--p", "2", "--x", "root:1/3", "--tol", "1e-9"]
    )

    assert args.tol == 1e-9
    assert args.accel == "richardson"
    assert args.verbose == 0
    assert not args.no_cache
    assert (args.seed, args.count, args.nmax) == (0, 20, 2000)


@pytest.mark.parametrize(
    "argv",
    [
        "identity list --seed 3 --count 4 --nmax 50",
        "eval zetan --n 3 --p 2 --x root:0/1 --seed 3 --count 4 --nmax 50",
    ],
)
def test_parser_global_flags(argv):
    args = build_parser().parse_args(argv.split())

    assert (args.seed, args.count, args.nmax) == (3, 4, 50)


def test_eval_amzv_bar_notation(capsys):
    code, doc = _run_json(capsys, "eval", "amzv", "--idx", "bar3,2,bar1,4")

    assert code in (0, 1)
    assert doc["results"][0]["indices"] == {
        "k": [3, 2, 1, 4],
        "x": ["root:1/2", "root:0/1", "root:1/2", "root:0/1"],
    }


def test_residue_check_boundary_f(capsys):
    code, doc = _run_json(
        capsys,
        "residue",
        "check",
        "--kernel",
        "F",
        "--p",
        "1",
        "--q",
        "2",
        "--x",
        "root:0/1",
        "--xs",
        "root:1/2",
        "--nmax",
        "10000",
    )

    assert code == 0
    assert doc["results"][0]["pass"]
    assert doc["results"][0]["spec"] == "F_{1;2}(root:1/2;root:0/1)"
