from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .numerics.values import ValueWithError

__all__ = [
    "ConvergenceError",
    "DivergenceError",
    "DomainError",
    "DuplicateIdentityError",
    "SamplerExhaustedError",
    "UnknownCoefficientError",
    "UnknownIdentityError",
]


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class DivergenceError(DomainError):
    """The requested series diverges, e.g. `(p,x)=(1,1)`."""


class ConvergenceError(ArithmeticError):
    """
    The tolerance could not be reached within the term budget.

    The best estimate obtained so far is kept on `estimate`.
    """

    def __init__(self, message: str, estimate: ValueWithError) -> None:
        super().__init__(message)
        self.estimate = estimate


class UnknownCoefficientError(LookupError):
    pass


class SamplerExhaustedError(RuntimeError):
    pass


class DuplicateIdentityError(KeyError):
    pass


class UnknownIdentityError(KeyError):
    pass
