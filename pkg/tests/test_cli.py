import json
import subprocess
import sys
from pathlib import Path

import pytest

from flagdesigns.checker import ClassificationReport, full_report
from flagdesigns.cli import run

FIXTURE = Path(__file__).parent / "fixtures" / "design45.txt"


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_then_verify(tmp_path, capsys):
    path = tmp_path / "pg32.design"
    code, out, _ = call(capsys, "construct", "pg-collinear", "--h", "4", "--q", "2", "-o", str(path))
    assert code == 0
    code, out, _ = call(capsys, "verify", str(path))
    assert code == 0
    assert out.strip() == "2-(15,3,1), b=35, symmetric: no"


def test_construct_to_stdout(capsys):
    code, out, _ = call(capsys, "construct", "ag-lines", "--h", "2", "--q", "3", "--with-group")
    assert code == 0
    assert out.startswith("# ag-lines h=2 q=3\ndesign v=9\n")
    assert "group degree=9" in out


def test_params_type1(capsys):
    code, out, _ = call(capsys, "params", "type1", "--lambda-max", "4")
    assert code == 0
    assert "(45,12,3)" in out and "(96,20,4)" in out
    assert len(out.strip().splitlines()) == 2


def test_numth_commands(capsys):
    assert call(capsys, "numth", "primitive-part", "2", "6")[1].strip() == "1"
    assert call(capsys, "numth", "qbin", "4", "2", "2")[1].strip() == "35"
    assert call(capsys, "numth", "rho", "27", "3", "336")[1].strip() == "29"
    code, out, _ = call(capsys, "--json-output", "numth", "lemma-div", "--pm-max", "6561")
    assert code == 0 and json.loads(out) == [[3, 5, 4], [9, 11, 5]]
    code, out, _ = call(capsys, "--json-output", "numth", "pillai", "--bound", "30")
    assert [5, 2, 3, 3] in json.loads(out)


@pytest.mark.parametrize("argv", [
    [],
    ["bogus"],
    ["numth", "pillai", "--bound", "1e6"],
    ["numth", "pillai", "--bound", "-5"],
    ["numth", "pillai", "--bound", "100000000000"],
    ["numth", "primitive-part", "1", "3"],
    ["numth", "qbin", "2", "3", "2"],
    ["params", "type1", "--lambda-max", "1000000"],
    ["construct", "pg-collinear", "--h", "3", "--q", "6"],
    ["construct", "pg-collinear", "--h", "2", "--q", "3"],
    ["construct", "ag-lines", "--h", "20", "--q", "2"],
    ["verify", "/nonexistent/file.design"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert call(capsys, *argv)[0] == 2


def test_parse_error_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.design"
    path.write_text("design v=4\nblock 0 2 1\n")
    code, _, err = call(capsys, "verify", str(path))
    assert code == 2 and "line 2" in err


def test_property_failure_exit_1(tmp_path, capsys):
    path = tmp_path / "nd.design"
    path.write_text("design v=5\nblock 0 1 2\nblock 2 3 4\n")
    code, out, _ = call(capsys, "verify", str(path))
    assert code == 1 and out.startswith("not a 2-design")
    code, _, _ = call(capsys, "analyze", str(path))
    assert code == 1


def test_analyze_json_round_trip(tmp_path, capsys):
    path = tmp_path / "ag.design"
    call(capsys, "construct", "ag-lines", "--h", "2", "--q", "3", "--with-group", "-o", str(path))
    code, out, _ = call(capsys, "--json-output", "analyze", str(path))
    assert code == 1  # not symmetric
    assert json.loads(out) == full_report(path).as_dict()
    code, out, _ = call(capsys, "analyze", str(path))
    assert ClassificationReport.parse_machine_section(out) == full_report(path).as_dict()


def test_params_json_round_trip(capsys):
    code, out, _ = call(capsys, "--json-output", "params", "k0eq2", "--lambda-max", "20")
    rows = json.loads(out)
    assert code == 0
    assert {"V1", "V2"} == {r["family"] for r in rows}
    assert all(r["lam"] * (r["v"] - 1) == r["k"] * (r["k"] - 1) for r in rows)


@pytest.mark.skipif(not FIXTURE.exists(), reason="no 2-(45,12,3) fixture")
def test_analyze_fixture_exit_0(capsys):
    code, out, _ = call(capsys, "analyze", str(FIXTURE))
    assert code == 0
    assert "conclusion: case-1" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "flagdesigns.cli", "numth", "qbin", "2", "1", "5"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "6"
