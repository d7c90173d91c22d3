from __future__ import annotations

import json
from pathlib import Path

import pytest

from ospxi.report import Check, Report, emit_report, residual_check, timed
from ospxi.scalar import XI, XiScalar


def test_empty_report():
    r = Report("hopf", [], {"order": 6}, "0.0")
    assert r.passed
    body = json.loads(r.to_json())
    assert body["summary"] == {"total": 0, "passed": 0, "failed": 0, "skipped": 0}
    assert r.to_text().endswith("0 passed, 0 failed, 0 skipped\n")


def test_failing_check_is_reported():
    bad = residual_check("demo.bad", "x = 0", XI**2 * 3, order=4)
    good = residual_check("demo.good", "0 = 0", XiScalar.const(0))
    skipped = Check("demo.skip", "not run", None)
    r = Report("demo", [bad, good, skipped], {}, "0.0")
    assert not r.passed
    assert bad.failing_order == 2 and bad.residual == "3*xi^2"
    body = json.loads(emit_report(r, "json"))
    assert [c["id"] for c in body["checks"]] == ["demo.bad", "demo.good", "demo.skip"]
    assert body["summary"]["failed"] == 1 and body["summary"]["skipped"] == 1
    text = emit_report(r, "text").decode()
    assert "FAIL  demo.bad" in text and "residual: 3*xi^2" in text


def test_json_is_deterministic_without_timings():
    checks = timed(lambda: [Check("a", "", True), Check("b", "", True)])
    r = Report("demo", checks, {}, "0.0")
    assert r.to_json() == Report("demo", list(reversed(checks)), {}, "0.0").to_json()
    assert "timings" in json.loads(r.to_json(timings=True))


def test_golden_report_matches_schema():
    jsonschema = pytest.importorskip("jsonschema")
    root = Path(__file__).resolve().parents[1]
    schema = json.loads((root / "docs" / "report.schema.json").read_text())
    jsonschema.validate(json.loads((root / "tests" / "golden" / "verify_all.json").read_text()), schema)
    r = Report("demo", timed(lambda: [residual_check("x", "", XI)]), {"order": 2}, "0.0")
    jsonschema.validate(json.loads(r.to_json(timings=True)), schema)
