from __future__ import annotations

import logging
import math
import threading
from collections.abc import Callable, Mapping

from .._errors import DomainError
from ..numerics.config import EvalConfig
from ..numerics.values import ValueWithError

__all__ = ["MEMO", "ValueMemo", "config_tag"]

logger = logging.getLogger(__name__)


def config_tag(cfg: EvalConfig, boundary: bool) -> str:
    """The part of a cache key that depends on the evaluation settings."""
    return (
        f"tol={cfg.tol_for(boundary)!r};max={cfg.max_terms};"
        f"accel={cfg.accel_mode.value};em={cfg.hurwitz_em_terms}"
    )


class ValueMemo:
    """
    Process-wide memo of evaluated series, keyed by canonical strings.

    Reads are lock-free; an insertion replaces a single entry under a lock,
    and entries are deterministic, so the last writer may win. The memo also
    counts the series terms summed to produce its entries, which is how a
    warm cache shows up in a run report.
    """

    def __init__(self) -> None:
        self._entries: dict[str, ValueWithError] = {}
        self._lock = threading.Lock()
        self.terms_summed = 0
        self.hits = 0
        self.misses = 0

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, key: str) -> bool:
        return key in self._entries

    def get_or_compute(
        self, key: str, compute: Callable[[], ValueWithError]
    ) -> ValueWithError:
        if (value := self._entries.get(key)) is not None:
            self.hits += 1
            logger.debug("memo hit %s", key)
            return value
        self.misses += 1
        value = compute()
        with self._lock:
            self._entries[key] = value
            self.terms_summed += value.terms_used
        return value

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()
            self.terms_summed = self.hits = self.misses = 0

    def export(self) -> dict[str, list[float]]:
        """Entries as `[re, im, abs_err, accelerated]` lists."""
        return {
            key: [v.value.real, v.value.imag, v.abs_err, float(v.accelerated)]
            for key, v in sorted(self._entries.items())
        }

    def load(self, entries: Mapping[str, list[float]]) -> int:
        """Add exported entries; returns how many were taken."""
        loaded: dict[str, ValueWithError] = {}
        for key, row in entries.items():
            if not 3 <= len(row) <= 4 or not all(
                isinstance(c, (int, float)) and math.isfinite(c) for c in row
            ):
                raise DomainError(f"`{key}` has a malformed cache entry.")
            loaded[key] = ValueWithError(
                complex(row[0], row[1]),
                row[2],
                accelerated=bool(row[3]) if len(row) == 4 else False,
            )
        with self._lock:
            self._entries.update(loaded)
        return len(loaded)


MEMO = ValueMemo()
