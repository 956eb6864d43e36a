from ._errors import (
    ConvergenceError,
    DivergenceError,
    DomainError,
    DuplicateIdentityError,
    SamplerExhaustedError,
    UnknownCoefficientError,
    UnknownIdentityError,
)
from .identities.harness import (
    VerificationReport,
    catalog_frame,
    check_identity,
    get_identity,
    register_builtin,
    reports_frame,
    sweep_identity,
)
from .identities.record import IdentityRecord
from .numerics.config import AccelMode, EvalConfig
from .numerics.params import (
    Approx,
    RootOfUnity,
    UnitParam,
    as_param,
    format_param,
    param_inverse,
    param_product,
    parse_param,
    root_of_unity,
)
from .numerics.values import ValueWithError
from .residue.expansions import (
    big_phi_expansion,
    phi_expansion_neg,
    phi_expansion_pos,
)
from .residue.kernels import (
    KernelSpec,
    ParityDecomposition,
    ResidueReport,
    kernel_residue,
    parity_decompose,
    residue_frame,
    residue_total,
)
from .residue.laurent import (
    LaurentSeries,
    ls_add,
    ls_coeff,
    ls_mul,
    ls_residue,
    ls_scale,
)
from .series.eulersum import (
    EulerSumSpec,
    MplTerm,
    euler_sum_as_mpls,
    euler_sum_eval,
    evaluate_terms,
    quadratic_to_mpl_chain,
    stuffle_linear,
    stuffle_quadratic,
)
from .series.mpl import (
    MplSpec,
    amzv_eval,
    brute_force_mpl,
    mpl_eval,
    parse_amzv,
)
from .series.polylog import (
    LI0_PAIR,
    bar_zeta,
    eta,
    finite_polylog_sum,
    hurwitz_zeta,
    polylog,
    reflected_finite_sum,
    shifted_tail,
    zeta,
)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "DivergenceError",
    "DomainError",
    "DuplicateIdentityError",
    "SamplerExhaustedError",
    "UnknownCoefficientError",
    "UnknownIdentityError",
    "AccelMode",
    "EvalConfig",
    "Approx",
    "RootOfUnity",
    "UnitParam",
    "ValueWithError",
    "as_param",
    "format_param",
    "param_inverse",
    "param_product",
    "parse_param",
    "root_of_unity",
    "LI0_PAIR",
    "bar_zeta",
    "eta",
    "finite_polylog_sum",
    "hurwitz_zeta",
    "polylog",
    "reflected_finite_sum",
    "shifted_tail",
    "zeta",
    "MplSpec",
    "amzv_eval",
    "brute_force_mpl",
    "mpl_eval",
    "parse_amzv",
    "EulerSumSpec",
    "MplTerm",
    "euler_sum_as_mpls",
    "euler_sum_eval",
    "evaluate_terms",
    "quadratic_to_mpl_chain",
    "stuffle_linear",
    "stuffle_quadratic",
    "LaurentSeries",
    "ls_add",
    "ls_coeff",
    "ls_mul",
    "ls_residue",
    "ls_scale",
    "big_phi_expansion",
    "phi_expansion_neg",
    "phi_expansion_pos",
    "KernelSpec",
    "ParityDecomposition",
    "ResidueReport",
    "kernel_residue",
    "parity_decompose",
    "residue_frame",
    "residue_total",
    "IdentityRecord",
    "VerificationReport",
    "catalog_frame",
    "check_identity",
    "get_identity",
    "register_builtin",
    "reports_frame",
    "sweep_identity",
]
