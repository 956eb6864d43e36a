from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass
from numbers import Number

from .._errors import DomainError

__all__ = ["ValueWithError", "vsum"]


@dataclass(frozen=True)
class ValueWithError:
    """
    A complex value together with a claimed absolute error bound.

    Every evaluator returns one. The arithmetic operators propagate the bound
    to first order (plus the product of the bounds for `*`), so displayed
    combinations can be written as ordinary expressions:

    ```{python}
    import eulersum as es

    cfg = es.EvalConfig()
    minus_one, one = es.as_param(-1), es.as_param(1)
    es.polylog(2, minus_one, cfg) * 2 + es.polylog(2, one, cfg)
    ```
    """

    value: complex
    abs_err: float = 0.0
    terms_used: int = 0
    accelerated: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", complex(self.value))
        abs_err = float(self.abs_err)
        if not math.isfinite(abs_err) or abs_err < 0:
            raise DomainError("`abs_err` must be finite and nonnegative.")
        object.__setattr__(self, "abs_err", abs_err)

    @classmethod
    def exact(cls, value: complex) -> ValueWithError:
        return cls(value, 0.0)

    @property
    def real(self) -> float:
        return self.value.real

    @property
    def imag(self) -> float:
        return self.value.imag

    def conjugate(self) -> ValueWithError:
        return ValueWithError(
            self.value.conjugate(),
            self.abs_err,
            self.terms_used,
            self.accelerated,
        )

    def _combine(
        self, other: ValueWithError, value: complex, abs_err: float
    ) -> ValueWithError:
        return ValueWithError(
            value,
            abs_err,
            self.terms_used + other.terms_used,
            self.accelerated or other.accelerated,
        )

    def __neg__(self) -> ValueWithError:
        return ValueWithError(
            -self.value, self.abs_err, self.terms_used, self.accelerated
        )

    def __add__(self, other: ValueWithError | Number) -> ValueWithError:
        if isinstance(other, ValueWithError):
            return self._combine(
                other, self.value + other.value, self.abs_err + other.abs_err
            )
        if isinstance(other, Number):
            return ValueWithError(
                self.value + complex(other),  # type: ignore[arg-type]
                self.abs_err,
                self.terms_used,
                self.accelerated,
            )
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: ValueWithError | Number) -> ValueWithError:
        return self + (-other)  # type: ignore[operator]

    def __rsub__(self, other: Number) -> ValueWithError:
        return (-self) + other

    def __mul__(self, other: ValueWithError | Number) -> ValueWithError:
        if isinstance(other, ValueWithError):
            err = (
                abs(self.value) * other.abs_err
                + abs(other.value) * self.abs_err
                + self.abs_err * other.abs_err
            )
            return self._combine(other, self.value * other.value, err)
        if isinstance(other, Number):
            c = complex(other)  # type: ignore[arg-type]
            return ValueWithError(
                self.value * c,
                self.abs_err * abs(c),
                self.terms_used,
                self.accelerated,
            )
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"{self.value} ± {self.abs_err:.1e}"


def vsum(values: Iterable[ValueWithError]) -> ValueWithError:
    """Add up values with error propagation; the empty sum is exact zero."""
    total = ValueWithError.exact(0)
    for v in values:
        total = total + v
    return total
