"""
The `eulersum` command.

    eulersum eval polylog --p 2 --x c:-1+0i
    eulersum identity sweep --id cor-3.3 --seed 7 --count 20
    eulersum residue check --kernel G --p 1,1 --q 3 --xs c:0.7+0i,c:0.5+0i

Exit codes: 0 when every check passes, 1 on a numeric failure, 2 on a
usage error, an unknown id or a divergent specification.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from collections.abc import Callable, Sequence

from .. import __version__
from .._errors import (
    ConvergenceError,
    DomainError,
    SamplerExhaustedError,
    UnknownIdentityError,
)
from ..identities.harness import (
    catalog_frame,
    check_identity,
    sweep_identity,
)
from ..numerics.config import AccelMode, EvalConfig
from ..numerics.params import UnitParam, parse_param
from ..numerics.values import ValueWithError
from ..residue.kernels import KernelSpec, parity_decompose, residue_total
from ..series.eulersum import EulerSumSpec, euler_sum_eval
from ..series.memo import MEMO
from ..series.mpl import MplSpec, mpl_eval, parse_amzv
from ..series.polylog import finite_polylog_sum, polylog
from .cache import CacheFile, cache_load, cache_path, cache_store
from .report import (
    EXIT_FAILURE,
    EXIT_USAGE,
    RunReport,
    config_payload,
    decomposition_payload,
    mpl_spec_payload,
    residue_payload,
    value_payload,
    verification_payload,
)

__all__ = ["build_parser", "main"]

logger = logging.getLogger(__name__)

# argument types


def _param(text: str) -> UnitParam:
    try:
        return parse_param(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(exc.args[0]) from None


def _params(text: str) -> tuple[UnitParam, ...]:
    return tuple(_param(part) for part in text.split(","))


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"`{text}` must be comma-separated integers."
        ) from None


def _assignments(text: str) -> dict[str, str]:
    out: dict[str, str] = {}
    for part in filter(None, text.split(",")):
        name, sep, value = part.partition("=")
        if not sep or not name:
            raise argparse.ArgumentTypeError(
                f"`{part}` must read `name=value`."
            )
        out[name.strip()] = value.strip()
    return out


# eval


def _eval_value(
    label: str, compute: Callable[[], ValueWithError]
) -> tuple[ValueWithError, bool]:
    try:
        return compute(), True
    except ConvergenceError as exc:
        logger.warning("%s: %s", label, exc)
        return exc.estimate, False


def _cmd_eval(
    args: argparse.Namespace, cfg: EvalConfig, report: RunReport
) -> None:
    extra: dict = {}
    if args.kind == "polylog":
        label = f"Li_{args.p}({args.x})"
        value, ok = _eval_value(label, lambda: polylog(args.p, args.x, cfg))
    elif args.kind == "zetan":
        label = f"zeta_{args.n}({args.p};{args.x})"
        value = ValueWithError(
            finite_polylog_sum(args.n, args.p, args.x), terms_used=args.n
        )
        ok = True
    elif args.kind == "eulersum":
        spec = EulerSumSpec(args.p, args.q, args.xs, args.x)
        label = str(spec)
        value, ok = _eval_value(label, lambda: euler_sum_eval(spec, cfg))
    else:
        if args.kind == "amzv":
            mpl = parse_amzv(args.idx)
        else:
            mpl = MplSpec(args.k, args.xs)
        label = str(mpl)
        extra = {"indices": mpl_spec_payload(mpl)}
        value, ok = _eval_value(label, lambda: mpl_eval(mpl, cfg))
    report.add({"spec": label, **extra, **value_payload(value)}, ok)


# identity


def _cmd_identity(
    args: argparse.Namespace, cfg: EvalConfig, report: RunReport
) -> None:
    if args.action == "list":
        for row in catalog_frame().iter_rows(named=True):
            report.add(row)
        return
    if args.action == "check":
        results = [check_identity(args.id, args.params, cfg)]
    else:
        results = sweep_identity(args.id, args.seed, args.count, cfg)
    for result in results:
        report.add(verification_payload(result), result.passed)


# residue


def _cmd_residue(
    args: argparse.Namespace, cfg: EvalConfig, report: RunReport
) -> None:
    spec = KernelSpec(
        args.kernel,
        args.p,
        args.q,
        args.xs,
        args.x,
        args.sign,
    )
    if args.action == "check":
        result = residue_total(spec, args.nmax, cfg)
        report.add(residue_payload(result), result.passed)
    else:
        parts = parity_decompose(spec, args.nmax, cfg)
        report.add(decomposition_payload(parts), parts.passed)


# parser


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="print the JSON run report"
    )
    common.add_argument(
        "--tol", type=float, default=None, help="target absolute tolerance"
    )
    common.add_argument(
        "--max-terms",
        type=int,
        default=EvalConfig.max_terms,
        help="term budget of one series",
    )
    common.add_argument(
        "--accel",
        choices=[mode.value for mode in AccelMode],
        default=EvalConfig.accel_mode.value,
        help="acceleration of boundary series",
    )
    common.add_argument(
        "--cache",
        default=None,
        help="cache file (default: $EULERSUM_CACHE, else in the cwd)",
    )
    common.add_argument(
        "--no-cache", action="store_true", help="neither read nor write"
    )
    common.add_argument(
        "--seed", type=int, default=0, help="seed of identity sweeps"
    )
    common.add_argument(
        "--count", type=int, default=20, help="draws per identity sweep"
    )
    common.add_argument(
        "--nmax",
        type=int,
        default=2000,
        help="last pole of a residue sum",
    )
    common.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log to stderr (-v info, -vv debug)",
    )
    return common


def _kernel_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--kernel", choices=["F", "G"], required=True)
    parser.add_argument("--p", type=_ints, required=True)
    parser.add_argument("--q", type=int, required=True)
    parser.add_argument("--xs", type=_params, required=True)
    parser.add_argument("--x", type=_param, default=None)
    parser.add_argument(
        "--sign", choices=["display", "proof"], default="display"
    )


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="eulersum",
        description=(
            "Evaluate cyclotomic Euler sums and polylogarithms and verify "
            "their parity identities."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"eulersum {__version__}"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    evaluate = commands.add_parser("eval", help="evaluate one series")
    kinds = evaluate.add_subparsers(dest="kind", required=True)
    p = kinds.add_parser("polylog", parents=[common], help="Li_p(x)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--x", type=_param, required=True)
    p = kinds.add_parser("zetan", parents=[common], help="zeta_n(p;x)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--x", type=_param, required=True)
    p = kinds.add_parser("mpl", parents=[common], help="Li_{k}(x)")
    p.add_argument("--k", type=_ints, required=True)
    p.add_argument("--xs", type=_params, required=True)
    p = kinds.add_parser(
        "amzv", parents=[common], help="alternating MZV in bar notation"
    )
    p.add_argument("--idx", required=True)
    p = kinds.add_parser(
        "eulersum", parents=[common], help="S_{p;q}(x_1..x_k;x)"
    )
    p.add_argument("--p", type=_ints, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--xs", type=_params, required=True)
    p.add_argument("--x", type=_param, required=True)
    evaluate.set_defaults(handler=_cmd_eval)

    identity = commands.add_parser("identity", help="the identity catalog")
    actions = identity.add_subparsers(dest="action", required=True)
    actions.add_parser("list", parents=[common], help="list the catalog")
    p = actions.add_parser("check", parents=[common], help="check once")
    p.add_argument("--id", required=True)
    p.add_argument("--params", type=_assignments, default={})
    p = actions.add_parser("sweep", parents=[common], help="seeded sweep")
    p.add_argument("--id", required=True)
    identity.set_defaults(handler=_cmd_identity)

    residue = commands.add_parser("residue", help="residue sums")
    actions = residue.add_subparsers(dest="action", required=True)
    _kernel_flags(
        actions.add_parser(
            "check", parents=[common], help="total of all residues"
        )
    )
    _kernel_flags(
        actions.add_parser(
            "decompose", parents=[common], help="order-r decomposition"
        )
    )
    residue.set_defaults(handler=_cmd_residue)
    return parser


def _configure_logging(verbose: int) -> None:
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(verbose, 2)]
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def _fail(message: str) -> int:
    print(f"eulersum: error: {message}", file=sys.stderr)
    return EXIT_USAGE


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    _configure_logging(args.verbose)

    try:
        cfg = EvalConfig(
            target_tol=args.tol,
            max_terms=args.max_terms,
            accel_mode=args.accel,
        )
    except DomainError as exc:
        return _fail(exc.args[0])
    path = None if args.no_cache else cache_path(args.cache)
    MEMO.clear()
    if path is not None:
        MEMO.load(cache_load(path).entries)

    report = RunReport(argv, config_payload(cfg, path and str(path)))
    started = time.perf_counter()
    try:
        args.handler(args, cfg, report)
    except (DomainError, UnknownIdentityError) as exc:
        return _fail(exc.args[0])
    except SamplerExhaustedError as exc:
        return _fail(exc.args[0])
    except ConvergenceError as exc:
        print(f"eulersum: {exc.args[0]}", file=sys.stderr)
        return EXIT_FAILURE
    report.wall_time_ms = (time.perf_counter() - started) * 1000
    report.terms_summed = MEMO.terms_summed

    if path is not None:
        cache_store(path, CacheFile(entries=MEMO.export()))
    print(report.to_json() if args.json else report.to_text())
    return report.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
