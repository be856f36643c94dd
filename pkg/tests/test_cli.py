import json
import subprocess
import sys

import pytest

from degzeta.cli import main
from degzeta.verify import VerifyReport


def run_cli(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_euler_json_golden(capsys):
    rc, out, _ = run_cli(capsys, "euler", "--n", "2", "--lambda", "1/2",
                         "--format", "json")
    assert rc == 0
    assert json.loads(out) == {"n": 2, "lambda": "1/2",
                               "poly": ["1/4", "-3/2", "1"]}


def test_euler_evaluated_at_x(capsys):
    rc, out, _ = run_cli(capsys, "euler", "--n", "2", "--lambda", "0",
                         "--x", "1/2", "--format", "json")
    assert rc == 0
    assert json.loads(out)["value"] == "-1/4"


def test_gamma_value_and_fields(capsys):
    rc, out, _ = run_cli(capsys, "gamma", "--s", "1", "--lambda", "0.2",
                         "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    assert abs(float(payload["value"]) - 1.25) < 1e-9
    assert float(payload["abs_error_estimate"]) >= 0
    assert payload["subdivisions"] >= 0


def test_zeta_auto_dispatch_exact_negative(capsys):
    rc, out, _ = run_cli(capsys, "zeta", "--s", "-2", "--x", "1",
                         "--lambda", "1/4", "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    assert payload["method"] == "exact-neg"
    assert payload["value"] == "1/10"


def test_zeta_classical_exact_path(capsys):
    rc, out, _ = run_cli(capsys, "zeta", "--s", "-3", "--x", "1/2")
    assert rc == 0
    assert out.strip() == "0"


def test_zeta_mellin_method(capsys):
    rc, out, _ = run_cli(capsys, "zeta", "--s", "2", "--x", "1",
                         "--lambda", "0.1", "--method", "mellin",
                         "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    assert abs(float(payload["value"]) - 1.6958056754) < 1e-6
    assert "abs_error_estimate" in payload


def test_zeta_neg_reports_both_candidates(capsys):
    rc, out, _ = run_cli(capsys, "zeta-neg", "--n", "2", "--x", "1",
                         "--lambda", "1/4", "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    assert payload["value_scaled"] == "1/10"
    assert payload["value_plain"] == "1/8"


def test_table_gamma_csv(capsys):
    rc, out, _ = run_cli(capsys, "table", "--function", "gamma",
                         "--grid", "n=1:4:4;lambda=0.1", "--format", "csv")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "n,lambda,value,abs_error_estimate"
    assert len(lines) == 5
    # Gamma(1|0.1) = 1/0.9
    first = lines[1].split(",")
    assert abs(float(first[2]) - 1.0 / 0.9) < 1e-8


def test_table_out_of_domain_cell_is_explicit_na(capsys):
    rc, out, _ = run_cli(capsys, "table", "--function", "zeta",
                         "--grid", "s=2,12;x=1;lambda=0.1", "--format", "csv")
    assert rc == 0
    lines = out.splitlines()
    assert len(lines) == 3
    assert lines[2].split(",", 3)[3].startswith('"NA:')


def test_table_missing_variable_is_usage_error(capsys):
    rc, _, err = run_cli(capsys, "table", "--function", "zeta",
                         "--grid", "s=1,2")
    assert rc == 2
    assert "must include" in err


def test_domain_error_exit_code(capsys):
    rc, _, err = run_cli(capsys, "gamma", "--s", "12", "--lambda", "0.1")
    assert rc == 2
    assert err.startswith("error:")


def test_verify_exactcore_passes(capsys):
    rc, out, _ = run_cli(capsys, "verify", "--suite", "exactcore")
    assert rc == 0
    lines = out.splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert "failed=0" in lines[-1]


def test_verify_report_round_trips(tmp_path, capsys):
    path = tmp_path / "report.json"
    rc, _, _ = run_cli(capsys, "verify", "--suite", "discrepancy",
                       "--report", str(path))
    assert rc == 0
    data = json.loads(path.read_text())
    report = VerifyReport.from_dict(data)
    assert report.to_dict() == data
    assert report.all_passed
    assert report.suite == "discrepancy"


def test_byte_identical_output_for_identical_argv(capsys):
    argv = ["zeta", "--s", "2.5", "--x", "1", "--lambda", "0.1",
            "--format", "json"]
    rc1, out1, _ = run_cli(capsys, *argv)
    rc2, out2, _ = run_cli(capsys, *argv)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_console_entry_point_usage_error():
    proc = subprocess.run(
        [sys.executable, "-m", "degzeta.cli", "gamma"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 2
