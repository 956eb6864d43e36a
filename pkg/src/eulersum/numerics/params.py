from __future__ import annotations

import cmath
import math
import re
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .._errors import DomainError

__all__ = [
    "UNIT_TOL",
    "Approx",
    "RootOfUnity",
    "UnitParam",
    "as_param",
    "canonical",
    "common_period",
    "format_param",
    "is_one",
    "is_root_of_unity",
    "on_circle",
    "param_inverse",
    "param_order",
    "param_product",
    "param_value",
    "parse_param",
    "root_of_unity",
    "snap_to_root",
]

UNIT_TOL = 2.0**-40

# largest order tried when an Approx point is matched against a root
_SNAP_MAX_ORDER = 12

# exact values at the quarter turns
_QUARTERS = {
    Fraction(0): 1 + 0j,
    Fraction(1, 4): 1j,
    Fraction(1, 2): -1 + 0j,
    Fraction(3, 4): -1j,
}


@dataclass(frozen=True)
class RootOfUnity:
    """
    The exact root of unity `exp(2*pi*i*numer/order)`.

    Instances are always stored in lowest terms; the identity is `(0, 1)`.
    """

    numer: int
    order: int

    def __post_init__(self) -> None:
        if self.order < 1:
            raise DomainError("`order` must be a positive integer.")
        if not 0 <= self.numer < self.order:
            raise DomainError("`numer` must satisfy 0 <= numer < order.")
        if math.gcd(self.numer, self.order) != 1 and self.order != 1:
            raise DomainError(
                "`numer` and `order` must be coprime; "
                "use `root_of_unity()` to reduce."
            )

    @classmethod
    def from_fraction(cls, angle: Fraction) -> RootOfUnity:
        angle = angle % 1
        return cls(angle.numerator, angle.denominator)

    @property
    def angle(self) -> Fraction:
        """The angle as a fraction of a full turn, in [0, 1)."""
        return Fraction(self.numer, self.order)

    @property
    def value(self) -> complex:
        if self.angle in _QUARTERS:
            return _QUARTERS[self.angle]
        # lower half plane mirrors the upper one, so conj(r) is exact
        if self.angle > Fraction(1, 2):
            return self.inverse().value.conjugate()
        return cmath.exp(2j * math.pi * self.numer / self.order)

    def is_one(self) -> bool:
        return self.numer == 0

    def on_circle(self) -> bool:
        return True

    def inverse(self) -> RootOfUnity:
        return RootOfUnity.from_fraction(-self.angle)

    def conjugate(self) -> RootOfUnity:
        return self.inverse()

    def power(self, k: int) -> RootOfUnity:
        return RootOfUnity.from_fraction(self.angle * k)

    def __mul__(self, other: RootOfUnity) -> RootOfUnity:
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        return RootOfUnity.from_fraction(self.angle + other.angle)

    def __str__(self) -> str:
        return f"root:{self.numer}/{self.order}"


@dataclass(frozen=True)
class Approx:
    """A floating complex argument with `|z| <= 1` (up to `UNIT_TOL`)."""

    z: complex

    def __post_init__(self) -> None:
        z = complex(self.z)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise DomainError("`z` must be finite.")
        if abs(z) > 1.0 + UNIT_TOL:
            raise DomainError(
                f"`z` must lie in the closed unit disk, got |z|={abs(z)!r}."
            )
        object.__setattr__(self, "z", z)

    @property
    def value(self) -> complex:
        return self.z

    def is_one(self) -> bool:
        return abs(self.z - 1.0) <= UNIT_TOL

    def on_circle(self) -> bool:
        return abs(abs(self.z) - 1.0) <= UNIT_TOL

    def __str__(self) -> str:
        return format_param(self)


UnitParam = Union[RootOfUnity, Approx]


def root_of_unity(a: int, N: int) -> RootOfUnity:
    """
    Build the reduced root of unity `exp(2*pi*i*a/N)`.

    Parameters
    ----------
    a
        Any integer; it is reduced modulo `N`.
    N
        The (not necessarily minimal) order. Must be positive.

    Returns
    -------
    RootOfUnity
        The root in lowest terms, e.g. `root_of_unity(2, 4)` is `(1, 2)`.

    Examples
    -------
    ```{python}
    import eulersum as es

    es.root_of_unity(2, 4)
    ```
    """
    if N < 1:
        raise DomainError("`N` must be a positive integer.")
    return RootOfUnity.from_fraction(Fraction(a, N))


def as_param(obj: UnitParam | complex | float | int) -> UnitParam:
    if isinstance(obj, (RootOfUnity, Approx)):
        return obj
    if isinstance(obj, str):
        return parse_param(obj)
    # integers 1 and -1 are exact by convention
    if isinstance(obj, int) and obj in (1, -1):
        return root_of_unity(0 if obj == 1 else 1, 2)
    return Approx(complex(obj))


def param_value(p: UnitParam) -> complex:
    return p.value


def is_one(p: UnitParam) -> bool:
    return p.is_one()


def param_order(p: UnitParam) -> int | None:
    """The order of an exact root, `None` for Approx arguments."""
    if isinstance(p, RootOfUnity):
        return p.order
    return None


def snap_to_root(p: UnitParam) -> RootOfUnity | None:
    """
    Return the exact root a parameter stands for, if any.

    Approx points within `UNIT_TOL` of a root of order at most 12 are
    matched, so that `c:-1+0i` evaluates like `root:1/2`.
    """
    if isinstance(p, RootOfUnity):
        return p
    if not p.on_circle():
        return None
    turn = cmath.phase(p.z) / (2 * math.pi)
    for order in range(1, _SNAP_MAX_ORDER + 1):
        candidate = root_of_unity(round(turn * order), order)
        if abs(candidate.value - p.z) <= UNIT_TOL:
            return candidate
    return None


def param_inverse(p: UnitParam) -> UnitParam:
    """
    Invert a parameter on the unit circle.

    Exact roots stay exact. Approx points must satisfy
    `| |z| - 1 | <= UNIT_TOL`; the inverse of an interior point would leave
    the closed unit disk.
    """
    if isinstance(p, RootOfUnity):
        return p.inverse()
    if not p.on_circle():
        raise DomainError(
            "`p` must lie on the unit circle to be inverted, "
            f"got |z|={abs(p.z)!r}."
        )
    # 1/z = conj(z)/|z|^2, and |z| is 1 up to UNIT_TOL
    return Approx(p.z.conjugate() / (abs(p.z) ** 2))


def param_product(ps: Iterable[UnitParam]) -> UnitParam:
    exact = root_of_unity(0, 1)
    approx: complex | None = None
    for p in ps:
        if isinstance(p, RootOfUnity):
            exact = exact * p
        else:
            approx = p.z if approx is None else approx * p.z
    if approx is None:
        return exact
    z = approx * exact.value
    # products of unit-modulus values may drift past 1 by rounding
    if abs(z) > 1.0:
        z = z / abs(z)
    return Approx(z)


_ROOT_RE = re.compile(r"^root:([+-]?\d+)/(\d+)$")


def parse_param(text: str) -> UnitParam:
    """
    Parse `root:a/N` or `c:RE+IMi` / `c:RE-IMi`.

    Examples
    -------
    ```{python}
    import eulersum as es

    es.parse_param("root:3/4"), es.parse_param("c:0.6-0.8i")
    ```
    """
    text = text.strip()
    if m := _ROOT_RE.match(text):
        return root_of_unity(int(m.group(1)), int(m.group(2)))
    if text.startswith("c:"):
        body = text[2:]
        if body.endswith("i"):
            body = body[:-1] + "j"
        try:
            return Approx(complex(body))
        except ValueError:
            pass
    raise DomainError(
        f"`{text}` is not a parameter; expected `root:a/N` or `c:RE+IMi`."
    )


def format_param(p: UnitParam) -> str:
    if isinstance(p, RootOfUnity):
        return str(p)
    re_part, im_part = p.z.real, p.z.imag
    sign = "-" if math.copysign(1.0, im_part) < 0 else "+"
    return f"c:{re_part!r}{sign}{abs(im_part)!r}i"


def canonical(p: UnitParam) -> str:
    """The string form used in cache keys and JSON output."""
    return format_param(p)


def is_root_of_unity(p: UnitParam) -> bool:
    return isinstance(p, RootOfUnity)


def on_circle(p: UnitParam) -> bool:
    return p.on_circle()


def common_period(ps: Iterable[UnitParam]) -> int | None:
    """
    The lcm of the orders of the roots among `ps`.

    Interior points do not contribute; `None` if some point on the circle
    is not a root of unity.
    """
    period = 1
    for p in ps:
        if (root := snap_to_root(p)) is not None:
            period = math.lcm(period, root.order)
        elif p.on_circle():
            return None
    return period
