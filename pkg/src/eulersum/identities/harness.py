from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType

import numpy as np
import polars as pl

from .._errors import (
    DivergenceError,
    DomainError,
    DuplicateIdentityError,
    UnknownIdentityError,
)
from ..numerics.config import EvalConfig
from ..numerics.values import ValueWithError
from .cubic import CUBIC_RECORDS
from .linear import LINEAR_RECORDS
from .quadratic import QUADRATIC_RECORDS
from .record import (
    IdentityRecord,
    ParamValue,
    Reading,
    format_params,
    sample_params,
)
from .terms import Evaluator

__all__ = [
    "BOUNDARY_CHECK_TOL",
    "INTERIOR_CHECK_TOL",
    "VerificationReport",
    "build_catalog",
    "catalog_frame",
    "check_identity",
    "get_identity",
    "register_builtin",
    "reports_frame",
    "sweep_identity",
]

logger = logging.getLogger(__name__)

BOUNDARY_CHECK_TOL = 1e-5
INTERIOR_CHECK_TOL = 1e-8


@dataclass(frozen=True)
class VerificationReport:
    """
    The outcome of one identity check.

    `passed` holds when `abs_diff <= tol_used + lhs.abs_err + rhs.abs_err`
    and the two sides shared no series. `variants` maps each alternative
    reading that was re-checked to its residual.
    """

    id: str
    params: dict[str, ParamValue]
    lhs: ValueWithError
    rhs: ValueWithError
    abs_diff: float
    tol_used: float
    passed: bool
    notes: str = ""
    variants: dict[str, float] = field(default_factory=dict)

    @property
    def params_text(self) -> str:
        return format_params(self.params)


def build_catalog(
    records: Iterable[IdentityRecord],
) -> Mapping[str, IdentityRecord]:
    """
    Index records by id in lexical order.

    Raises
    ------
    DuplicateIdentityError
        When two records share an id.
    """
    out: dict[str, IdentityRecord] = {}
    for record in records:
        if record.id in out:
            raise DuplicateIdentityError(
                f"`{record.id}` is registered twice."
            )
        out[record.id] = record
    return MappingProxyType(dict(sorted(out.items())))


@lru_cache(maxsize=1)
def _catalog() -> Mapping[str, IdentityRecord]:
    return build_catalog(
        (*LINEAR_RECORDS, *QUADRATIC_RECORDS, *CUBIC_RECORDS)
    )


def register_builtin() -> tuple[IdentityRecord, ...]:
    """
    The built-in catalog, ordered by id.

    Examples
    -------
    ```{python}
    import eulersum as es

    [record.id for record in es.register_builtin()]
    ```
    """
    return tuple(_catalog().values())


def get_identity(id: str) -> IdentityRecord:
    try:
        return _catalog()[id]
    except KeyError:
        raise UnknownIdentityError(
            f"`{id}` is not a known identity."
        ) from None


def _tolerance(record: IdentityRecord) -> float:
    return BOUNDARY_CHECK_TOL if record.boundary else INTERIOR_CHECK_TOL


def _evaluate(
    record: IdentityRecord,
    params: Mapping[str, ParamValue],
    reading: Reading,
    cfg: EvalConfig,
) -> tuple[ValueWithError, ValueWithError, Evaluator, Evaluator]:
    lhs_eval = reading.lhs or record.lhs_eval
    rhs_eval = reading.rhs or record.rhs_eval
    lhs_ev = Evaluator(cfg, eta_reading=reading.eta_reading)
    rhs_ev = Evaluator(cfg, eta_reading=reading.eta_reading)
    return (
        lhs_eval(lhs_ev, params),
        rhs_eval(rhs_ev, params),
        lhs_ev,
        rhs_ev,
    )


def _agrees(
    lhs: ValueWithError, rhs: ValueWithError, tol: float
) -> tuple[float, bool]:
    diff = abs(lhs.value - rhs.value)
    return diff, diff <= tol + lhs.abs_err + rhs.abs_err


def check_identity(
    id: str,
    params: Mapping[str, object] | None = None,
    cfg: EvalConfig | None = None,
) -> VerificationReport:
    """
    Evaluate both sides of a registered identity and compare them.

    The two sides run through separate evaluators. A series evaluated by
    both sides fails the check, since agreement would then be partly
    circular, and so does a series on either side that ran out of terms
    before converging. When the default reading fails, every alternative
    reading of the record is evaluated and its residual reported.

    Parameters
    ----------
    id
        A catalog id, e.g. `"thm-3.1"`.
    params
        Parameter values by name; exponents as integers, arguments as
        `UnitParam` or in `root:a/N` syntax. Fixed parameters may be left
        out.
    cfg
        Evaluation settings for the series on both sides.

    Returns
    -------
    VerificationReport
        Both sides, their distance and the verdict.

    Raises
    ------
    UnknownIdentityError
        For ids outside the catalog.
    DivergenceError
        When the parameters fall on an excluded case; the message lists
        every violated clause.

    Examples
    -------
    ```{python}
    import eulersum as es

    es.check_identity("eq-3.6", {"q": 2})
    ```
    """
    cfg = cfg or EvalConfig()
    record = get_identity(id)
    values = record.normalize(params or {})
    if violated := record.violations(values):
        raise DivergenceError(
            f"`{id}` excludes {', '.join(violated)} "
            f"at {format_params(values)}."
        )
    tol = _tolerance(record)
    lhs, rhs, lhs_ev, rhs_ev = _evaluate(record, values, Reading(), cfg)
    abs_diff, passed = _agrees(lhs, rhs, tol)
    notes = [*lhs_ev.notes, *rhs_ev.notes]
    if shared := sorted(lhs_ev.touched & rhs_ev.touched):
        notes.append(f"both sides evaluate {', '.join(shared)}")
        passed = False
    if lhs_ev.unconverged or rhs_ev.unconverged:
        passed = False

    variants: dict[str, float] = {}
    if not passed and record.variants:
        notes.append(f"default reading leaves {abs_diff:.3e}")
        for name, reading in record.variants.items():
            v_lhs, v_rhs, v_lev, v_rev = _evaluate(
                record, values, reading, cfg
            )
            diff, vanishes = _agrees(v_lhs, v_rhs, tol)
            if v_lev.unconverged or v_rev.unconverged:
                vanishes = False
            variants[name] = diff
            if vanishes:
                logger.warning(
                    "%s(%s): reading `%s` vanishes (%.3e) where the "
                    "default one leaves %.3e",
                    id,
                    format_params(values),
                    name,
                    diff,
                    abs_diff,
                )
                notes.append(f"reading `{name}` vanishes: {diff:.3e}")
            else:
                notes.append(f"reading `{name}` leaves {diff:.3e}")

    report = VerificationReport(
        id,
        values,
        lhs,
        rhs,
        abs_diff,
        tol,
        passed,
        "; ".join(notes),
        variants,
    )
    logger.info(
        "%s(%s): |lhs - rhs| = %.3e (%s)",
        id,
        report.params_text,
        abs_diff,
        "pass" if passed else "FAIL",
    )
    return report


def sweep_identity(
    id: str,
    seed: int,
    count: int,
    cfg: EvalConfig | None = None,
) -> list[VerificationReport]:
    """
    Check an identity at `count` seeded random admissible parameters.

    The same seed draws the same parameter sequence; reports come back in
    draw order.

    Raises
    ------
    SamplerExhaustedError
        When a draw finds no admissible parameters.
    """
    if count < 1:
        raise DomainError("`count` must be a positive integer.")
    record = get_identity(id)
    rng = np.random.default_rng(seed)
    draws = [sample_params(record, rng) for _ in range(count)]
    reports = []
    for i, params in enumerate(draws, start=1):
        reports.append(check_identity(id, params, cfg))
        logger.info("%s: sweep %d/%d done", id, i, count)
    failed = sum(not r.passed for r in reports)
    logger.info("%s: %d/%d pass", id, count - failed, count)
    return reports


def reports_frame(reports: Iterable[VerificationReport]) -> pl.DataFrame:
    """
    Reports as a DataFrame, one row each.

    Columns are `id`, `params`, `lhs_re`, `lhs_im`, `rhs_re`, `rhs_im`,
    `abs_diff`, `tol_used`, `passed` and `notes`.
    """
    reports = list(reports)
    return pl.DataFrame(
        {
            "id": [r.id for r in reports],
            "params": [r.params_text for r in reports],
            "lhs_re": [r.lhs.value.real for r in reports],
            "lhs_im": [r.lhs.value.imag for r in reports],
            "rhs_re": [r.rhs.value.real for r in reports],
            "rhs_im": [r.rhs.value.imag for r in reports],
            "abs_diff": [r.abs_diff for r in reports],
            "tol_used": [r.tol_used for r in reports],
            "passed": [r.passed for r in reports],
            "notes": [r.notes for r in reports],
        },
        schema={
            "id": pl.String,
            "params": pl.String,
            "lhs_re": pl.Float64,
            "lhs_im": pl.Float64,
            "rhs_re": pl.Float64,
            "rhs_im": pl.Float64,
            "abs_diff": pl.Float64,
            "tol_used": pl.Float64,
            "passed": pl.Boolean,
            "notes": pl.String,
        },
    )


def catalog_frame() -> pl.DataFrame:
    """The catalog as a DataFrame of `id`, `title`, `params` and `anchor`."""
    records = register_builtin()
    return pl.DataFrame(
        {
            "id": [r.id for r in records],
            "title": [r.title for r in records],
            "params": [",".join(r.free_params) for r in records],
            "anchor": [r.anchor for r in records],
        },
        schema={
            "id": pl.String,
            "title": pl.String,
            "params": pl.String,
            "anchor": pl.String,
        },
    )
