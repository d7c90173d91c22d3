"""Check records and report rendering shared by every verification suite."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

SCHEMA_VERSION = "ospxi.report.v1"
MAX_RESIDUAL_TERMS = 6


@dataclass
class Check:
    id: str
    anchor: str
    passed: bool | None  # None = skipped
    order: int | None = None
    residual: str = "0"
    failing_order: int | None = None
    detail: dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def status(self) -> str:
        if self.passed is None:
            return "skip"
        return "pass" if self.passed else "fail"

    def as_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "status": self.status,
            "order": self.order,
            "failing_order": self.failing_order,
            "residual": self.residual,
            "detail": self.detail,
        }


def residual_check(id: str, anchor: str, residual, order: int | None = None, **detail) -> Check:
    """A check that passes iff ``residual`` (an element, matrix or scalar) is zero."""
    zero = residual.is_zero() if hasattr(residual, "is_zero") else not residual
    failing = None
    text = "0"
    if not zero:
        text = summarize(residual)
        v = getattr(residual, "valuation", None)
        if callable(v):
            failing = v()
    return Check(id, anchor, zero, order, text, failing, dict(detail))


def summarize(residual) -> str:
    terms = getattr(residual, "terms", None)
    if isinstance(terms, dict) and len(terms) > MAX_RESIDUAL_TERMS:
        head = residual._like(dict(sorted(terms.items(), key=lambda kv: repr(kv[0]))[:MAX_RESIDUAL_TERMS]), residual.prec)
        return f"{head.render()} + ... ({len(terms)} terms)"
    render = getattr(residual, "render", None)
    return render() if callable(render) else str(residual)


def timed(fn: Callable[[], Check | Iterable[Check]]) -> list[Check]:
    t0 = time.perf_counter()
    out = fn()
    checks = [out] if isinstance(out, Check) else list(out)
    dt = (time.perf_counter() - t0) / max(len(checks), 1)
    for c in checks:
        c.elapsed = dt
    return checks


def all_passed(checks: Iterable[Check]) -> bool:
    return all(c.passed is not False for c in checks)


@dataclass
class Report:
    suite: str
    checks: list[Check]
    config: dict[str, Any]
    version: str = ""

    @property
    def passed(self) -> bool:
        return all_passed(self.checks)

    def body(self) -> dict[str, Any]:
        checks = sorted(self.checks, key=lambda c: c.id)
        return {
            "schema": SCHEMA_VERSION,
            "tool_version": self.version,
            "suite": self.suite,
            "config": self.config,
            "summary": {
                "total": len(checks),
                "passed": sum(c.status == "pass" for c in checks),
                "failed": sum(c.status == "fail" for c in checks),
                "skipped": sum(c.status == "skip" for c in checks),
            },
            "checks": [c.as_dict() for c in checks],
        }

    def to_json(self, timings: bool = False) -> str:
        body = self.body()
        if timings:
            body["timings"] = {c.id: round(c.elapsed, 4) for c in self.checks}
        return json.dumps(body, indent=2, sort_keys=True, ensure_ascii=True) + "\n"

    def to_text(self) -> str:
        checks = sorted(self.checks, key=lambda c: c.id)
        width = max([len(c.id) for c in checks] + [5])
        lines = [f"ospxi {self.version} suite={self.suite} " + " ".join(f"{k}={v}" for k, v in sorted(self.config.items()))]
        for c in checks:
            line = f"{c.status.upper():4}  {c.id:<{width}}  order={c.order if c.order is not None else '-'}"
            if c.status == "fail":
                line += f"  residual: {c.residual}"
            lines.append(line)
        b = self.body()["summary"]
        lines.append(f"{b['passed']} passed, {b['failed']} failed, {b['skipped']} skipped")
        return "\n".join(lines) + "\n"


def emit_report(report: Report, format: str = "text") -> bytes:
    if format == "json":
        return report.to_json().encode("ascii")
    if format == "text":
        return report.to_text().encode("ascii", errors="replace")
    raise ValueError(f"unknown format {format!r}")
