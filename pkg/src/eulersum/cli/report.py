"""
JSON payloads of the CLI.

Every subcommand builds a `RunReport`; the text output is a rendering of
the same payload, so `--json` and the default output never disagree.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

from ..identities.harness import VerificationReport
from ..numerics.config import EvalConfig
from ..numerics.params import canonical
from ..numerics.values import ValueWithError
from ..residue.kernels import ParityDecomposition, ResidueReport
from ..series.mpl import MplSpec

__all__ = [
    "RunReport",
    "config_payload",
    "decomposition_payload",
    "mpl_spec_payload",
    "residue_payload",
    "value_payload",
    "verification_payload",
]

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _complex(z: complex) -> dict[str, float]:
    return {"re": z.real, "im": z.imag}


def value_payload(v: ValueWithError) -> dict[str, Any]:
    return {
        "value": _complex(v.value),
        "abs_err": v.abs_err,
        "terms_used": v.terms_used,
        "accelerated": v.accelerated,
    }


def mpl_spec_payload(spec: MplSpec) -> dict[str, Any]:
    return {"k": list(spec.k), "x": [canonical(xj) for xj in spec.x]}


def verification_payload(report: VerificationReport) -> dict[str, Any]:
    # counters are left out so warm and cold runs print the same fields
    return {
        "id": report.id,
        "params": report.params_text,
        "lhs": {**_complex(report.lhs.value), "abs_err": report.lhs.abs_err},
        "rhs": {**_complex(report.rhs.value), "abs_err": report.rhs.abs_err},
        "abs_diff": report.abs_diff,
        "tol_used": report.tol_used,
        "pass": report.passed,
        "notes": report.notes,
        "variants": dict(report.variants),
    }


def residue_payload(report: ResidueReport) -> dict[str, Any]:
    total = report.extrapolated_total
    return {
        "spec": str(report.spec),
        "n_max": report.n_max,
        "total": {**_complex(total.value), "abs_err": total.abs_err},
        "tol_used": report.tol_used,
        "pass": report.passed,
        "vanishing_conventions": [
            c.value for c in report.vanishing_conventions
        ],
    }


def decomposition_payload(parts: ParityDecomposition) -> dict[str, Any]:
    return {
        "spec": str(parts.spec),
        "forward": _complex(parts.order_r_forward.value),
        "mirror": _complex(parts.order_r_mirror.value),
        "remainder": _complex(parts.lower_order_remainder.value),
        "residual": abs(parts.residual.value),
        "tol_used": parts.tol_used,
        "pass": parts.passed,
    }


def config_payload(cfg: EvalConfig, cache: str | None) -> dict[str, Any]:
    return {
        "target_tol": cfg.target_tol,
        "max_terms": cfg.max_terms,
        "accel": cfg.accel_mode.value,
        "hurwitz_em_terms": cfg.hurwitz_em_terms,
        "cache": cache,
    }


@dataclass
class RunReport:
    """
    The single JSON document one CLI invocation prints.

    `passed` and `failed` count the checks in `results`; the exit code is
    1 as soon as one failed.
    """

    command: list[str]
    config: dict[str, Any]
    results: list[dict[str, Any]] = field(default_factory=list)
    passed: int = 0
    failed: int = 0
    terms_summed: int = 0
    wall_time_ms: float = 0.0

    def add(self, payload: dict[str, Any], ok: bool = True) -> None:
        self.results.append(payload)
        if ok:
            self.passed += 1
        else:
            self.failed += 1

    @property
    def exit_code(self) -> int:
        return EXIT_FAILURE if self.failed else EXIT_OK

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [_result_line(payload) for payload in self.results]
        total = self.passed + self.failed
        lines.append(
            f"{self.passed}/{total} ok, {self.terms_summed} terms summed, "
            f"{self.wall_time_ms:.0f} ms"
        )
        return "\n".join(lines)


def _format_complex(z: dict[str, float]) -> str:
    return f"{z['re']:.12g}{z['im']:+.12g}i"


def _result_line(payload: dict[str, Any]) -> str:
    if "abs_diff" in payload:
        verdict = "pass" if payload["pass"] else "FAIL"
        line = (
            f"{payload['id']}({payload['params']}): "
            f"|lhs - rhs| = {payload['abs_diff']:.3e} "
            f"(tol {payload['tol_used']:.0e}) {verdict}"
        )
        if payload["notes"]:
            line += f"\n  {payload['notes']}"
        return line
    if "anchor" in payload:
        return (
            f"{payload['id']:<10} {payload['title']} "
            f"[{payload['params']}]\n  {payload['anchor']}"
        )
    if "total" in payload:
        verdict = "pass" if payload["pass"] else "FAIL"
        return (
            f"{payload['spec']} n_max={payload['n_max']}: total "
            f"{_format_complex(payload['total'])} "
            f"± {payload['total']['abs_err']:.1e} {verdict}"
        )
    if "residual" in payload:
        verdict = "pass" if payload["pass"] else "FAIL"
        return (
            f"{payload['spec']}: forward "
            f"{_format_complex(payload['forward'])}, mirror "
            f"{_format_complex(payload['mirror'])}, remainder "
            f"{_format_complex(payload['remainder'])}, residual "
            f"{payload['residual']:.3e} {verdict}"
        )
    return (
        f"{payload['spec']} = {_format_complex(payload['value'])} "
        f"± {payload['abs_err']:.1e} ({payload['terms_used']} terms)"
    )
