from __future__ import annotations

import json
import subprocess
import sys

import pytest

from ospxi import cli


def test_scaling_suite_text(capsysbinary):
    assert cli.main(["verify", "scaling"]) == cli.EXIT_OK
    out = capsysbinary.readouterr().out.decode()
    assert out.startswith("ospxi ") and "0 failed" in out


def test_json_to_file(tmp_path):
    out = tmp_path / "r.json"
    assert cli.main(["verify", "scaling", "--format", "json", "--out", str(out)]) == 0
    body = json.loads(out.read_text())
    assert body["suite"] == "scaling" and body["summary"]["failed"] == 0
    assert "timings" not in body
    assert cli.main(["verify", "scaling", "--format", "json", "--timings", "--out", str(out)]) == 0
    assert "timings" in json.loads(out.read_text())


def test_order_env(monkeypatch, tmp_path):
    out = tmp_path / "r.json"
    monkeypatch.setenv("OSPXI_ORDER", "3")
    cli.main(["verify", "scaling", "--format", "json", "--out", str(out)])
    assert json.loads(out.read_text())["config"]["order"] == 3
    cli.main(["verify", "scaling", "--order", "5", "--format", "json", "--out", str(out)])
    assert json.loads(out.read_text())["config"]["order"] == 5


@pytest.mark.parametrize("argv", [
    ["verify", "nosuch"],
    ["verify", "hopf", "--order", "0"],
    ["verify", "ybe", "--spin", "1/3"],
    [],
])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as info:
        cli.main(argv)
    assert info.value.code == cli.EXIT_USAGE


def test_bad_env_order_exits_2(monkeypatch):
    monkeypatch.setenv("OSPXI_ORDER", "zero")
    with pytest.raises(SystemExit) as info:
        cli.main(["eval", "h"])
    assert info.value.code == 2


def test_eval(capsys):
    assert cli.main(["eval", "v+ * v-"]) == 0
    assert capsys.readouterr().out == "-v-*v+ - 1/4*h\n"
    assert cli.main(["eval", "h + nope"]) == 2
    assert "position 4" in capsys.readouterr().err


def test_failing_report_exits_1(monkeypatch, capsysbinary):
    from ospxi.report import Check

    monkeypatch.setitem(cli.SUITE_FUNCS, "scaling", lambda **_: [Check("forced", "", False)])
    assert cli.main(["verify", "scaling"]) == cli.EXIT_FAIL
    assert b"FAIL  forced" in capsysbinary.readouterr().out


def test_hopf_suite_low_order():
    report = cli.run_suite("hopf", order=3)
    assert report.passed and report.checks


def test_console_script_entry():
    proc = subprocess.run([sys.executable, "-m", "ospxi.cli", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("ospxi ")
