from __future__ import annotations

from hypothesis import HealthCheck, settings

settings.register_profile("ospxi", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ospxi")

_ACCEPTANCE: list[tuple[str, str]] = []


def pytest_runtest_logreport(report) -> None:
    # a setup error (e.g. a failing fixture) counts as a failed criterion too
    relevant = report.when == "call" or (report.when == "setup" and report.failed)
    if relevant and "test_acceptance.py::test_criterion_" in report.nodeid:
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter) -> None:
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_ACCEPTANCE):
        number = int(name.split("_")[2])
        label = " ".join(name.split("_")[3:])
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d} {status}  {label}")
