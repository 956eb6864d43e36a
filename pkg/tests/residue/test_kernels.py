import logging
from itertools import product

import pytest

import eulersum as es
from eulersum.residue import formulas
from eulersum.identities.terms import Evaluator
from eulersum.residue.kernels import KernelVariant, SignConvention

I = es.root_of_unity(1, 4)
W = es.root_of_unity(1, 3)
MINUS_ONE = es.root_of_unity(1, 2)
ONE = es.root_of_unity(0, 1)
Z6 = es.root_of_unity(1, 6)
Z6_BAR = es.root_of_unity(5, 6)


def _close(a, b):
    return abs(a - b) <= 1e-10 * (1 + abs(b))


# boundary F kernels and interior G kernels whose residues must cancel
F_KERNELS = [
    es.KernelSpec("F", p, q, xs, x)
    for (p, xs), q, x in product(
        [
            ((1,), (MINUS_ONE,)),
            ((2,), (I,)),
            ((1,), (W,)),
            ((1, 1), (MINUS_ONE, I)),
            ((2, 1), (W, MINUS_ONE)),
        ],
        [2, 3],
        [ONE, MINUS_ONE, I],
    )
]
G_KERNELS = [
    es.KernelSpec("G", p, q, tuple(es.Approx(v) for v in xs))
    for (p, xs), q in product(
        [
            ((1,), (0.5,)),
            ((2,), (-0.6,)),
            ((3,), (0.3j,)),
            ((1, 1), (0.7, 0.5)),
            ((1, 2), (-0.4, 0.6j)),
            ((2, 2), (0.5j, 0.5j)),
            ((1, 1, 1), (0.5, -0.5, 0.4)),
            ((2, 1, 1), (0.6, 0.3, -0.5j)),
            ((1, 1, 1, 1), (0.5, 0.4, -0.3, 0.6)),
            ((3, 1), (0.2 + 0.3j, -0.7)),
        ],
        [1, 2, 3],
    )
]


@pytest.mark.parametrize("pole", [-20, -7, -1, 0, 3, 20])
@pytest.mark.parametrize(
    "p, q, x, y",
    [
        (1, 2, ONE, MINUS_ONE),
        (2, 2, W, I),
        (3, 1, MINUS_ONE, W),
        (2, 3, Z6, ONE),
        (1, 1, I, Z6),
        (3, 3, ONE, I),
    ],
)
def test_linear_f_residues(cfg, pole, p, q, x, y):
    spec = es.KernelSpec("F", (p,), q, (y,), x)
    residue = es.kernel_residue(spec, pole, cfg)
    if pole < 0:
        expected = formulas.linear_f_residue_neg(-pole, p, q, x, y, cfg)
    elif pole == 0:
        expected = formulas.linear_f_residue_zero(p, q, x, y, cfg)
    else:
        expected = formulas.f_residue_pos(pole, (p,), q, x, (y,), cfg)

    assert _close(residue, expected)


@pytest.mark.parametrize("pole", [-20, -4, -1, 0, 2, 15])
@pytest.mark.parametrize(
    "p1, p2, q, x, x1, x2",
    [
        (1, 2, 2, MINUS_ONE, I, W),
        (2, 2, 1, W, MINUS_ONE, I),
        (3, 1, 2, ONE, ONE, MINUS_ONE),
        (1, 1, 3, I, Z6, MINUS_ONE),
        (2, 3, 1, Z6, W, ONE),
        (3, 3, 3, MINUS_ONE, I, I),
    ],
)
def test_quadratic_f_residues(cfg, pole, p1, p2, q, x, x1, x2):
    spec = es.KernelSpec("F", (p1, p2), q, (x1, x2), x)
    residue = es.kernel_residue(spec, pole, cfg)
    if pole < 0:
        expected = formulas.quadratic_f_residue_neg(
            -pole, p1, p2, q, x, x1, x2, cfg
        )
    elif pole == 0:
        expected = formulas.quadratic_f_residue_zero(
            p1, p2, q, x, x1, x2, cfg
        )
    else:
        expected = formulas.f_residue_pos(pole, (p1, p2), q, x, (x1, x2), cfg)

    assert _close(residue, expected)


@pytest.mark.parametrize("pole", [-20, -6, -2, -1, 0])
@pytest.mark.parametrize(
    "p1, p2, q, x1, x2",
    [
        (1, 1, 3, es.Approx(0.7), es.Approx(0.5)),
        (2, 1, 2, I, MINUS_ONE),
        (3, 2, 1, W, I),
        (1, 2, 1, MINUS_ONE, Z6),
        (2, 2, 3, ONE, W),
        (3, 3, 1, Z6, W),
    ],
)
def test_quadratic_g_residues(cfg, pole, p1, p2, q, x1, x2):
    spec = es.KernelSpec("G", (p1, p2), q, (x1, x2))
    residue = es.kernel_residue(spec, pole, cfg)
    if pole < 0:
        expected = formulas.quadratic_g_residue_neg(
            -pole, p1, p2, q, x1, x2, cfg
        )
    else:
        expected = formulas.quadratic_g_residue_zero(p1, p2, q, x1, x2, cfg)

    assert _close(residue, expected)


@pytest.mark.parametrize("pole", [-20, -3, -1, 0])
@pytest.mark.parametrize("q", [1, 2, 3])
@pytest.mark.parametrize(
    "xs",
    [
        (MINUS_ONE, I, W),
        (I, I, W),
        (Z6, W, I),
        (Z6_BAR, I, W),
    ],
)
def test_unit_g_residues(cfg, pole, q, xs):
    spec = es.KernelSpec("G", (1, 1, 1), q, xs)
    residue = es.kernel_residue(spec, pole, cfg)
    if pole < 0:
        expected = formulas.unit_g_residue_neg(-pole, q, xs, cfg)
    else:
        expected = formulas.unit_g_residue_zero(q, xs, cfg)

    assert _close(residue, expected)


@pytest.mark.parametrize("pole", [-15, -2, -1, 0])
@pytest.mark.parametrize("q", [1, 2])
@pytest.mark.parametrize(
    "xs",
    [
        (MINUS_ONE, I, W, Z6),
        (I, I, I, W),
        (MINUS_ONE, MINUS_ONE, W, Z6_BAR),
    ],
)
def test_quartic_g_residues(cfg, pole, q, xs):
    spec = es.KernelSpec("G", (1, 1, 1, 1), q, xs)
    residue = es.kernel_residue(spec, pole, cfg)
    if pole < 0:
        expected = formulas.unit_g_residue_neg(-pole, q, xs, cfg)
    else:
        expected = formulas.unit_g_residue_zero(q, xs, cfg)

    assert _close(residue, expected)


@pytest.mark.parametrize("pole", [-20, -2, -1, 0, 1, 9])
@pytest.mark.parametrize("q", [1, 2])
@pytest.mark.parametrize(
    "x, xs",
    [
        (ONE, (MINUS_ONE, I, W)),
        (MINUS_ONE, (I, I, W)),
        (W, (Z6, MINUS_ONE, I)),
    ],
)
def test_cubic_f_residues(cfg, pole, q, x, xs):
    spec = es.KernelSpec("F", (1, 1, 1), q, xs, x)
    residue = es.kernel_residue(spec, pole, cfg)
    if pole < 0:
        expected = formulas.unit_f_residue_neg(-pole, q, x, xs, cfg)
    elif pole == 0:
        expected = formulas.unit_f_residue_zero(q, x, xs, cfg)
    else:
        expected = formulas.f_residue_pos(pole, (1, 1, 1), q, x, xs, cfg)

    assert _close(residue, expected)


def test_g_kernel_is_analytic_at_positive_integers(cfg):
    spec = es.KernelSpec("G", (1, 1), 3, (I, W))

    assert es.kernel_residue(spec, 4, cfg) == 0


def test_proof_convention_flips_odd_depth(cfg):
    display = es.KernelSpec("F", (2,), 2, (I,), W)
    proof = display.with_convention(SignConvention.PROOF)

    assert proof.sign == -1
    assert es.kernel_residue(proof, -2, cfg) == -es.kernel_residue(
        display, -2, cfg
    )


def test_li_pair_conventions(cfg, one):
    assert formulas.li_pair(0, I, cfg) == es.LI0_PAIR == -1
    assert formulas.phi_pair(0, one, cfg) == 0


def test_residue_total_boundary_f(cfg, one, minus_one):
    spec = es.KernelSpec("F", (1,), 2, (minus_one,), one)
    report = es.residue_total(spec, 10_000, cfg)

    assert report.passed
    assert report.n_max == 10_000
    assert report.tol_used == pytest.approx(1e-5)
    assert abs(report.extrapolated_total.value) <= 1e-5
    assert report.extrapolated_total.accelerated
    assert set(report.vanishing_conventions) == set(SignConvention)
    assert len(report.per_pole) == 20_001


def test_residue_total_interior_g(cfg):
    spec = es.KernelSpec("G", (1, 1), 3, (es.Approx(0.7), es.Approx(0.5)))
    report = es.residue_total(spec, 300, cfg)

    assert report.passed
    assert abs(report.extrapolated_total.value) <= 1e-9
    assert not report.extrapolated_total.accelerated


def test_residue_total_raise(cfg, one, minus_one):
    spec = es.KernelSpec("F", (1,), 2, (minus_one,), one)

    with pytest.raises(es.DomainError) as exc_info:
        es.residue_total(spec, 0, cfg)

    assert "`n_max` must be a positive integer." in exc_info.value.args[0]


def test_parity_decompose(cfg, minus_one):
    spec = es.KernelSpec(
        "F", (1, 1), 2, (minus_one, minus_one), minus_one
    )
    parts = es.parity_decompose(spec, 2000, cfg)

    assert parts.passed
    assert parts.tol_used == pytest.approx(1e-5)
    assert abs(parts.residual.value) <= 1e-5


def test_parity_decompose_raise(cfg, half, one):
    g = es.KernelSpec("G", (1, 1), 3, (half, half))
    with pytest.raises(es.DomainError) as exc_info:
        es.parity_decompose(g, 100, cfg)
    assert "`spec` must be an F kernel." in exc_info.value.args[0]

    interior = es.KernelSpec("F", (1,), 2, (half,), one)
    with pytest.raises(es.DomainError) as exc_info:
        es.parity_decompose(interior, 100, cfg)
    assert "`phi_args` must be roots of unity." in exc_info.value.args[0]


def test_residue_frame(cfg):
    spec = es.KernelSpec("G", (1, 1), 3, (es.Approx(0.7), es.Approx(0.5)))
    frame = es.residue_frame(es.residue_total(spec, 5, cfg))

    assert frame.columns == ["pole", "re", "im", "abs"]
    assert frame.height == 11
    assert frame["pole"].to_list() == list(range(-5, 6))
    assert frame.filter(frame["pole"] > 0)["abs"].to_list() == [0.0] * 5


def test_kernel_spec_text(one, minus_one):
    spec = es.KernelSpec("F", (1,), 2, (minus_one,), one)

    assert spec.variant is KernelVariant.F
    assert str(spec) == "F_{1;2}(root:1/2;root:0/1)"
    assert spec.combined_arg == minus_one
    assert [spec.pole_order(n) for n in (3, 0, -3)] == [1, 4, 2]


@pytest.mark.parametrize(
    "args, message",
    [
        (("F", (1,), 2, (MINUS_ONE,)), "`big_phi_arg` is required"),
        (
            ("F", (1,), 2, (MINUS_ONE,), es.Approx(0.5)),
            "`big_phi_arg` must be a root of unity",
        ),
        (("G", (1,), 2, (MINUS_ONE,), ONE), "must be None for G kernels"),
        (("G", (), 2, ()), "`p` must not be empty."),
        (("G", (1, 2), 2, (I,)), "must have the same length."),
        (("G", (0,), 2, (I,)), "`p` and `q` must be positive integers."),
    ],
)
def test_kernel_spec_raise(args, message):
    with pytest.raises(es.DomainError) as exc_info:
        es.KernelSpec(*args)

    assert message in exc_info.value.args[0]


@pytest.mark.parametrize(
    "args, message",
    [
        (("G", (2, 1), 2, (I, ONE)), "phi(s;x_2) diverges at (p_2,x_2)=(1,1)"),
        (
            ("F", (2,), 1, (MINUS_ONE,), MINUS_ONE),
            "the kernel sums diverge at (q,x x_1...x_r)=(1,1).",
        ),
    ],
)
def test_kernel_spec_divergence_raise(args, message):
    with pytest.raises(es.DivergenceError) as exc_info:
        es.KernelSpec(*args)

    assert message in exc_info.value.args[0]


@pytest.mark.slow
@pytest.mark.parametrize("spec", F_KERNELS, ids=str)
def test_residue_total_boundary_f_kernels(cfg, spec):
    report = es.residue_total(spec, 2000, cfg)

    assert report.passed, report.extrapolated_total
    assert abs(report.extrapolated_total.value) <= 1e-5


@pytest.mark.parametrize("spec", G_KERNELS, ids=str)
def test_residue_total_interior_g_kernels(cfg, spec):
    report = es.residue_total(spec, 400, cfg)

    assert report.passed
    assert abs(report.extrapolated_total.value) <= 1e-9


def test_vanishing_conventions_are_checked(cfg, caplog):
    # a truncated interior total is far from 0 under both conventions
    spec = es.KernelSpec("G", (1, 1), 3, (es.Approx(0.7), es.Approx(0.5)))
    with caplog.at_level(logging.DEBUG, logger="eulersum.residue.kernels"):
        report = es.residue_total(spec, 1, cfg)

    assert not report.passed
    assert report.vanishing_conventions == ()
    assert "proof total" in caplog.text


def test_vanishing_conventions_proof(cfg, one, minus_one):
    spec = es.KernelSpec(
        "F", (1,), 2, (minus_one,), one, SignConvention.PROOF
    )
    report = es.residue_total(spec, 2000, cfg)

    assert report.passed
    assert set(report.vanishing_conventions) == set(SignConvention)


@pytest.mark.slow
@pytest.mark.parametrize(
    "p, xs, q, x",
    [
        ((1,), (MINUS_ONE,), 2, ONE),
        ((2,), (I,), 1, W),
        ((1, 1), (MINUS_ONE, MINUS_ONE), 2, MINUS_ONE),
        ((1, 2), (I, W), 2, MINUS_ONE),
        ((1, 1, 1), (MINUS_ONE, I, W), 2, ONE),
        ((2, 1, 1), (MINUS_ONE, MINUS_ONE, I), 1, W),
    ],
)
def test_parity_decompose_orders(cfg, p, xs, q, x):
    spec = es.KernelSpec("F", p, q, xs, x)
    parts = es.parity_decompose(spec, 2000, cfg)

    assert abs(parts.residual.value) <= 1e-5


@pytest.mark.slow
@pytest.mark.parametrize(
    "p, q, x, y",
    [(1, 2, ONE, MINUS_ONE), (2, 1, I, W), (2, 2, MINUS_ONE, I)],
)
def test_parity_remainder_matches_double_polylog_parity(cfg, p, q, x, y):
    spec = es.KernelSpec("F", (p,), q, (y,), x)
    parts = es.parity_decompose(spec, 2000, cfg)
    record = es.get_identity("thm-3.1")
    params = record.normalize({"p": p, "q": q, "x": x, "y": y})
    rhs = record.rhs_eval(Evaluator(cfg), params)
    shift = es.polylog(p + q, x, cfg) * (-1) ** (p + q)

    assert abs((parts.lower_order_remainder + shift).value - rhs.value) <= 1e-5


@pytest.mark.slow
@pytest.mark.parametrize(
    "p1, p2, q, x, x1, x2",
    [
        (1, 1, 2, MINUS_ONE, MINUS_ONE, MINUS_ONE),
        (1, 2, 2, ONE, I, MINUS_ONE),
        (2, 1, 1, W, MINUS_ONE, I),
    ],
)
def test_parity_remainder_matches_quadratic_parity(
    cfg, p1, p2, q, x, x1, x2
):
    # the forward sum runs over zeta_{n-1}; moving to zeta_n leaves two
    # linear sums and Li_w(1/x)
    spec = es.KernelSpec("F", (p1, p2), q, (x1, x2), x)
    parts = es.parity_decompose(spec, 2000, cfg)
    record = es.get_identity("thm-4.1")
    params = record.normalize(
        {"p1": p1, "p2": p2, "q": q, "x": x, "x1": x1, "x2": x2}
    )
    rhs = record.rhs_eval(Evaluator(cfg), params)
    ev = Evaluator(cfg)
    inv_big = es.param_inverse(es.param_product([x, x1, x2]))
    shift = (
        ev.s((p1,), p2 + q, (x1,), es.param_product([x2, inv_big]))
        + ev.s((p2,), p1 + q, (x2,), es.param_product([x1, inv_big]))
        - ev.li(p1 + p2 + q, es.param_inverse(x))
    )

    assert abs((shift - parts.lower_order_remainder).value - rhs.value) <= 1e-5
