"""
The building blocks identity sides are written with.

An `Evaluator` wraps the series evaluators so that a displayed combination
reads like the formula it transcribes:

```{python}
import eulersum as es
from eulersum.identities.terms import Evaluator

ev = Evaluator()
x = es.root_of_unity(1, 2)
ev.li(2, x) * 2 + ev.s((1,), 2, (x,), x)
```

Every Euler sum and multiple polylogarithm of depth two or more an evaluator
touches is recorded under its canonical key; the harness compares the keys of
the two sides of an identity to make sure the right-hand side never
evaluates the left-hand side's own series.
"""

from __future__ import annotations

import cmath
import logging
from collections.abc import Iterable, Sequence
from functools import lru_cache

from .._errors import ConvergenceError
from ..numerics.config import EvalConfig
from ..numerics.params import (
    UnitParam,
    as_param,
    param_inverse,
    param_product,
)
from ..numerics.values import ValueWithError, vsum
from ..residue.kernels import (
    KernelSpec,
    ParityDecomposition,
    parity_decompose,
)
from ..series.eulersum import EulerSumSpec, euler_sum_eval, evaluate_terms
from ..series.mpl import MplSpec, mpl_eval, parse_amzv
from ..series.polylog import LI0_PAIR, polylog

__all__ = [
    "Evaluator",
    "inv",
    "mul",
]

logger = logging.getLogger(__name__)


@lru_cache(maxsize=64)
def _decompose(
    spec: KernelSpec, n_max: int, cfg: EvalConfig
) -> ParityDecomposition:
    return parity_decompose(spec, n_max, cfg)


def mul(*xs: UnitParam) -> UnitParam:
    return param_product(as_param(x) for x in xs)


def inv(x: UnitParam) -> UnitParam:
    return param_inverse(as_param(x))


class Evaluator:
    """
    Evaluate the terms of one side of an identity.

    Parameters
    ----------
    cfg
        Evaluation settings handed to every series evaluator.
    eta_reading
        Read each barred index of `zeta()` with the sign of
        `sum (-1)**(n-1) / n**k` instead of `sum (-1)**n / n**k`.
    """

    def __init__(
        self, cfg: EvalConfig | None = None, eta_reading: bool = False
    ) -> None:
        self.cfg = cfg or EvalConfig()
        self.eta_reading = eta_reading
        self.touched: set[str] = set()
        self.notes: list[str] = []
        self.unconverged: list[str] = []

    def _guard(self, label: str, compute) -> ValueWithError:
        try:
            return compute()
        except ConvergenceError as exc:
            logger.warning("%s kept its best estimate: %s", label, exc)
            self.notes.append(f"{label} did not converge")
            self.unconverged.append(label)
            return exc.estimate

    def li(self, k: int, x: UnitParam) -> ValueWithError:
        x = as_param(x)
        return self._guard(f"Li_{k}({x})", lambda: polylog(k, x, self.cfg))

    def pair(self, m: int, x: UnitParam) -> ValueWithError:
        """`(-1)**m Li_{m+1}(x) - Li_{m+1}(1/x)`, 0 at `m = 0, x = 1`."""
        x = as_param(x)
        if m == 0 and x.is_one():
            return ValueWithError.exact(0)
        return self.li(m + 1, x) * (-1) ** m - self.li(m + 1, inv(x))

    def li_pair(self, l: int, x: UnitParam) -> ValueWithError:
        """`(-1)**l Li_l(x) + Li_l(1/x)`, -1 at `l = 0`."""
        if l == 0:
            return ValueWithError.exact(LI0_PAIR)
        return -self.pair(l - 1, x)

    def s(
        self,
        p: Sequence[int],
        q: int,
        args: Sequence[UnitParam],
        outer: UnitParam,
    ) -> ValueWithError:
        spec = EulerSumSpec(tuple(p), q, tuple(args), outer)
        self.touched.add(spec.canonical)
        return self._guard(
            str(spec), lambda: euler_sum_eval(spec, self.cfg)
        )

    def mpl(
        self, k: Sequence[int], xs: Sequence[UnitParam]
    ) -> ValueWithError:
        spec = MplSpec(tuple(k), tuple(xs))
        if spec.depth > 1:
            self.touched.add(spec.canonical)
        return self._guard(str(spec), lambda: mpl_eval(spec, self.cfg))

    def zeta(self, text: str) -> ValueWithError:
        """An alternating MZV in bar notation, e.g. `"bar2,1"`."""
        spec = parse_amzv(text)
        value = self.mpl(spec.k, spec.x)
        if self.eta_reading:
            bars = sum(1 for xj in spec.x if not xj.is_one())
            value = value * (-1) ** bars
        return value

    def terms(self, chain: Iterable) -> ValueWithError:
        chain = list(chain)
        for term in chain:
            for factor in term.factors:
                if factor.depth > 1:
                    self.touched.add(factor.canonical)
        return self._guard(
            "MPL chain", lambda: evaluate_terms(chain, self.cfg)
        )

    def decompose(self, spec: KernelSpec, n_max: int) -> ParityDecomposition:
        """`parity_decompose()` of an F kernel, cached across evaluators."""
        return _decompose(spec, n_max, self.cfg)

    def log2(self) -> ValueWithError:
        return -self.li(1, as_param(-1))

    @staticmethod
    def log_minus_one_squared() -> ValueWithError:
        # principal branch: log(-1) = i*pi
        return ValueWithError.exact(cmath.log(-1) ** 2)

    @staticmethod
    def total(values: Iterable[ValueWithError]) -> ValueWithError:
        return vsum(values)
