"""The command-line interface: report shape, determinism, exit codes."""

import json
import subprocess
import sys

import pytest

from hopfcyc import cli
from hopfcyc.errors import ParseError


def run_cli(capsys, argv):
    code = cli.run(argv)
    out = capsys.readouterr().out
    return code, out


def test_reproduce_paper_deterministic(capsys):
    _, first = run_cli(capsys, ["reproduce-paper"])
    _, second = run_cli(capsys, ["reproduce-paper"])
    assert first == second
    report = json.loads(first)
    assert report["command"] == "reproduce-paper"
    assert report["result"]["ok"]


def test_report_has_no_timing_and_sorted_keys(capsys):
    _, out = run_cli(capsys, ["reproduce-paper"])
    report = json.loads(out)
    assert "timing" not in report
    assert "elapsed" not in out
    assert out == json.dumps(report, sort_keys=True, indent=2) + "\n"
    assert set(report) == {"command", "version", "input_sha256", "result"}


def test_verify_hopf_vacuous_degree_zero(capsys):
    code, out = run_cli(capsys, ["verify-hopf", "--degree", "0"])
    assert code == 0
    assert json.loads(out)["result"]["ok"]


def test_verify_hopf_on_shipped_file(capsys):
    import importlib.resources

    path = str(importlib.resources.files("hopfcyc") / "data" / "h1cop.hopf")
    code, out = run_cli(capsys, ["verify-hopf", "--file", path, "--degree", "2"])
    result = json.loads(out)["result"]
    assert result["ok"] and result["roundtrip"]


def test_json_flag_writes_identical_report(capsys, tmp_path):
    target = tmp_path / "report.json"
    _, out = run_cli(capsys, ["check-matched-pair", "--json", str(target)])
    assert target.read_text(encoding="utf-8") == out


def test_fast_check_commands(capsys):
    for cmd in ["check-matched-pair", "quotient-coideal", "check-sayd", "ch-sayd", "ah-sayd"]:
        code, out = run_cli(capsys, [cmd])
        assert code == 0
        assert json.loads(out)["result"]["ok"], cmd


def test_cohomology_report(capsys):
    _, out = run_cli(capsys, ["cohomology", "--upto", "2"])
    result = json.loads(out)["result"]
    assert result["ok"]
    assert result["point"]["lambda_complex"] == [1, 0, 1]


def test_parse_error_raised_in_process(tmp_path):
    bad = tmp_path / "bad.hopf"
    bad.write_text("hopf t { generators X Q; }")
    with pytest.raises(ParseError):
        cli.run(["verify-hopf", "--file", str(bad)])


def test_exit_codes_via_subprocess(tmp_path):
    bad = tmp_path / "bad.hopf"
    bad.write_text("hopf t { generators X; rule X -> X X; }")
    proc = subprocess.run(
        [sys.executable, "-c",
         "import sys; sys.argv = ['hopfcyc', 'verify-hopf', '--file', sys.argv[1]];"
         "from hopfcyc.cli import main; main()",
         str(bad)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 7
    assert "termination order" in proc.stderr

    syntax = tmp_path / "syntax.hopf"
    syntax.write_text("hopf t { generators X Q; }")
    proc = subprocess.run(
        [sys.executable, "-c",
         "import sys; sys.argv = ['hopfcyc', 'verify-hopf', '--file', sys.argv[1]];"
         "from hopfcyc.cli import main; main()",
         str(syntax)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 3
    assert "line 1" in proc.stderr


def test_unknown_command_rejected():
    with pytest.raises(SystemExit) as exc:
        cli.run(["frobnicate"])
    assert exc.value.code == 2


def test_timing_goes_to_stderr(capsys):
    cli.run(["check-matched-pair"])
    captured = capsys.readouterr()
    assert "elapsed" in captured.err
    assert "elapsed" not in captured.out
