from __future__ import annotations

import dataclasses
import enum
from dataclasses import dataclass

from .._errors import DomainError

__all__ = [
    "BOUNDARY_TOL",
    "INTERIOR_TOL",
    "AccelMode",
    "EvalConfig",
]

INTERIOR_TOL = 1e-8
BOUNDARY_TOL = 1e-6


class AccelMode(str, enum.Enum):
    """How boundary series are accelerated; values are the CLI spellings."""

    NONE = "none"
    AITKEN = "aitken"
    LEVIN = "levin"
    RICHARDSON = "richardson"


@dataclass(frozen=True)
class EvalConfig:
    """
    Evaluation settings shared by every evaluator.

    Parameters
    ----------
    target_tol
        The absolute error an evaluator must reach. `None` picks `1e-8`
        for interior arguments and `1e-6` for arguments on the unit circle.
    max_terms
        The largest number of series terms summed for one value.
    accel_mode
        The acceleration used for boundary series.
    hurwitz_em_terms
        The Euler-Maclaurin order of the Hurwitz zeta tail.
    """

    target_tol: float | None = None
    max_terms: int = 2_000_000
    accel_mode: AccelMode = AccelMode.RICHARDSON
    hurwitz_em_terms: int = 8

    def __post_init__(self) -> None:
        if self.target_tol is not None and not self.target_tol >= 1e-14:
            raise DomainError("`target_tol` must be at least 1e-14.")
        if self.max_terms < 10:
            raise DomainError("`max_terms` must be at least 10.")
        if not 1 <= self.hurwitz_em_terms <= 30:
            raise DomainError("`hurwitz_em_terms` must be between 1 and 30.")
        object.__setattr__(self, "accel_mode", AccelMode(self.accel_mode))

    @classmethod
    def interior(cls, **kwargs) -> EvalConfig:
        return cls(target_tol=INTERIOR_TOL, **kwargs)

    @classmethod
    def boundary(cls, **kwargs) -> EvalConfig:
        return cls(target_tol=BOUNDARY_TOL, **kwargs)

    def tol_for(self, boundary: bool) -> float:
        if self.target_tol is not None:
            return self.target_tol
        return BOUNDARY_TOL if boundary else INTERIOR_TOL

    def replace(self, **changes) -> EvalConfig:
        return dataclasses.replace(self, **changes)
