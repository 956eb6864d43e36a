from __future__ import annotations

import enum
import numbers
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .._errors import DomainError, SamplerExhaustedError
from ..numerics.params import (
    RootOfUnity,
    UnitParam,
    as_param,
    format_param,
    root_of_unity,
    snap_to_root,
)
from ..numerics.values import ValueWithError
from .terms import Evaluator, mul

__all__ = [
    "IdentityRecord",
    "ParamKind",
    "ParamSpec",
    "Params",
    "Reading",
    "exponent",
    "format_params",
    "nonunit_clause",
    "root",
    "sample_params",
    "unit_clause",
]

MAX_ATTEMPTS = 10_000

ParamValue = Union[int, UnitParam]
Params = Mapping[str, ParamValue]
Side = Callable[[Evaluator, Params], ValueWithError]
Constraints = Callable[[Params], list[str]]


class ParamKind(str, enum.Enum):
    EXPONENT = "exponent"
    ROOT = "root"


@dataclass(frozen=True)
class ParamSpec:
    """
    One named parameter of an identity.

    Exponents are drawn from `low..high`; roots of unity from the orders
    `1..high` with a uniform numerator. A `fixed` value is never drawn.
    """

    name: str
    kind: ParamKind
    high: int = 4
    low: int = 1
    fixed: ParamValue | None = None

    def draw(self, rng: np.random.Generator) -> ParamValue:
        if self.fixed is not None:
            return self.fixed
        if self.kind is ParamKind.EXPONENT:
            return int(rng.integers(self.low, self.high + 1))
        order = int(rng.integers(1, self.high + 1))
        return root_of_unity(int(rng.integers(0, order)), order)

    def coerce(self, value: object) -> ParamValue:
        if self.kind is ParamKind.EXPONENT:
            if isinstance(value, bool) or not isinstance(
                value, (numbers.Integral, str)
            ):
                raise DomainError(f"`{self.name}` must be an integer.")
            try:
                out = int(value)
            except ValueError:
                raise DomainError(
                    f"`{self.name}` must be an integer, got {value!r}."
                ) from None
            if out < 1:
                raise DomainError(
                    f"`{self.name}` must be a positive integer."
                )
            return out
        x = as_param(value)  # type: ignore[arg-type]
        snapped = snap_to_root(x)
        if snapped is None:
            raise DomainError(
                f"`{self.name}` must be a root of unity, got {x}."
            )
        return snapped


def exponent(
    name: str, high: int = 4, fixed: int | None = None
) -> ParamSpec:
    return ParamSpec(name, ParamKind.EXPONENT, high=high, fixed=fixed)


def root(name: str, high: int = 6, fixed: str | None = None) -> ParamSpec:
    return ParamSpec(
        name,
        ParamKind.ROOT,
        high=high,
        fixed=None if fixed is None else as_param(fixed),
    )


@dataclass(frozen=True)
class Reading:
    """
    An alternative reading of a displayed identity.

    Missing sides fall back to the record's own evaluators.
    """

    rhs: Side | None = None
    lhs: Side | None = None
    eta_reading: bool = False


def _no_constraints(params: Params) -> list[str]:
    return []


@dataclass(frozen=True)
class IdentityRecord:
    """
    A registered identity: parameters, constraints and the two sides.

    `constraints` returns the violated clauses, e.g. `"(q,xy)=(1,1)"`; it
    compares exact roots of unity, so the answer never depends on rounding.
    """

    id: str
    anchor: str
    title: str
    params_schema: tuple[ParamSpec, ...]
    lhs_eval: Side
    rhs_eval: Side
    constraints: Constraints = _no_constraints
    variants: Mapping[str, Reading] = field(
        default_factory=dict, compare=False, hash=False
    )
    boundary: bool = True

    @property
    def param_names(self) -> tuple[str, ...]:
        return tuple(spec.name for spec in self.params_schema)

    @property
    def free_params(self) -> tuple[str, ...]:
        return tuple(
            spec.name for spec in self.params_schema if spec.fixed is None
        )

    def normalize(
        self, params: Mapping[str, object]
    ) -> dict[str, ParamValue]:
        """Coerce `params` to the schema, filling in fixed values."""
        unknown = sorted(set(params) - set(self.param_names))
        if unknown:
            raise DomainError(
                f"`{self.id}` takes {', '.join(self.param_names) or 'no'} "
                f"parameters, got {', '.join(unknown)}."
            )
        out: dict[str, ParamValue] = {}
        for spec in self.params_schema:
            if spec.name in params:
                value = spec.coerce(params[spec.name])
                if spec.fixed is not None and value != spec.fixed:
                    raise DomainError(
                        f"`{spec.name}` is fixed at {spec.fixed} "
                        f"in `{self.id}`."
                    )
                out[spec.name] = value
            elif spec.fixed is not None:
                out[spec.name] = spec.fixed
            else:
                raise DomainError(f"`{self.id}` needs `{spec.name}`.")
        return out

    def violations(self, params: Params) -> list[str]:
        return self.constraints(params)


def format_params(params: Params) -> str:
    return ",".join(
        f"{name}={value}"
        if isinstance(value, int)
        else f"{name}={format_param(value)}"
        for name, value in params.items()
    )


def sample_params(
    record: IdentityRecord,
    rng: np.random.Generator,
    attempts: int = MAX_ATTEMPTS,
) -> dict[str, ParamValue]:
    """
    Draw parameters that satisfy the record's constraints.

    Raises
    ------
    SamplerExhaustedError
        When `attempts` draws all violate a constraint.
    """
    for _ in range(attempts):
        params = {
            spec.name: spec.draw(rng) for spec in record.params_schema
        }
        if not record.violations(params):
            return params
    raise SamplerExhaustedError(
        f"`{record.id}` found no admissible parameters in {attempts} draws."
    )


# constraint clauses


def unit_clause(
    label: str, exponent_value: int, *args: RootOfUnity
) -> list[str]:
    """`[label]` when the exponent is 1 and the product of `args` is 1."""
    if exponent_value == 1 and mul(*args).is_one():
        return [label]
    return []


def nonunit_clause(name: str, x: RootOfUnity) -> list[str]:
    return [f"{name}=1"] if x.is_one() else []
