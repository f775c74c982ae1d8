import csv
import json
import subprocess
import sys

import pytest

from nakayama.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_invariants_for_4_5(capsys):
    code, out, _ = run(capsys, "invariants", "--series", "4,5")
    doc = json.loads(out)
    assert code == 0
    assert doc["gldim"] == "infinite" and doc["findim"] == 2
    assert doc["class"] == "SS" and doc["pattern"] == {"k": 2, "q": 1} and doc["witness"] == [2, 1]


def test_invariants_for_linear_series(capsys):
    code, out, _ = run(capsys, "invariants", "--series", "linear:2,2,1")
    assert code == 0 and json.loads(out)["gldim"] == 2


def test_resolve_traces(capsys):
    assert run(capsys, "resolve", "--series", "4,5", "--module", "1,1")[1].strip() == (
        "M(1,1) -> M(2,3) -> M(1,2) -> cycle@2"
    )
    assert run(capsys, "resolve", "--series", "2,3", "--module", "1,1", "--dual")[1].strip() == (
        "M(1,1) -> M(2,1) -> M(2,2) -> 0"
    )


def test_psi_reports_bounds_only_when_finite(capsys):
    doc = json.loads(run(capsys, "psi", "--series", "2,2,2,3")[1])
    assert doc["profile"]["m"] == 1
    assert doc["bounds"]["gldim_le_n_plus_m_minus_1"] == {"lhs": 4, "rhs": 4, "holds": True, "attained": True}
    doc = json.loads(run(capsys, "psi", "--series", "4,5")[1])
    assert doc["bounds"] is None and not doc["criterion"]["gldim_finite"]
    assert run(capsys, "psi", "--series", "linear:2,1")[0] == 2


def test_stratified_with_order_and_search(capsys):
    code, out, _ = run(capsys, "stratified", "--series", "4,5", "--order", "2,1", "--search")
    doc = json.loads(out)
    assert code == 0
    assert doc["order"]["delta"] == [1, 4] and doc["order"]["proper_delta"] == [1, 2]
    assert doc["order"]["standardly_stratified"] and doc["search_witness"] == [2, 1]
    assert run(capsys, "stratified", "--series", "4,5", "--order", "1,1")[0] == 2
    assert run(capsys, "stratified", "--series", ",".join(["2"] * 9), "--search")[0] == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--max-len", "3")
    assert code == 0 and out.split() == ["2,2", "2,3", "3,3"]
    assert run(capsys, "enumerate", "--n", "1..4", "--max-len", "3n", "--count")[1].strip() == str(2 + 9 + 28 + 95)
    assert run(capsys, "enumerate", "--n", "3", "--max-len", "3", "--kind", "linear")[1].split() == [
        "linear:2,2,1", "linear:3,2,1"
    ]


def test_extremal(capsys):
    doc = json.loads(run(capsys, "extremal", "--n", "4", "--max-len", "8")[1])
    assert {"series": "2,2,2,3", "n": 4, "m": 1, "gldim": 4} in doc


def test_verify_clean_sweep(capsys, tmp_path):
    out_file = tmp_path / "report.csv"
    code, out, err = run(capsys, "verify", "--n", "2..4", "--max-len", "9", "--format", "csv", "--out", str(out_file))
    assert code == 0 and err == ""
    rows = list(csv.DictReader(out_file.open()))
    assert rows and all(r["passed"] == "true" for r in rows)


def test_verify_json_to_stdout(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--max-len", "4", "--suites", "bounds,homology")
    doc = json.loads(out)
    assert code == 0 and doc["summary"]["failures"] == 0 and doc["summary"]["series"] == 5


def test_verify_exits_one_on_violations(capsys, monkeypatch):
    from nakayama import verify

    broken = verify.Property("broken", "bounds", ("cyclic",), lambda ks: (False, "nope"))
    monkeypatch.setitem(verify.REGISTRY, "broken", broken)
    code, _, err = run(capsys, "verify", "--n", "2", "--max-len", "3", "--suites", "bounds")
    assert code == 1 and "FAIL 2,2 broken: nope" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["invariants", "--series", "4,2"],
        ["invariants", "--series", ""],
        ["resolve", "--series", "2,3", "--module", "1,5"],
        ["verify", "--n", "2", "--suites", "nope"],
        ["verify", "--n", "9", "--suites", "stratification"],
    ],
)
def test_validation_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


@pytest.mark.parametrize(
    "argv",
    [
        ["invariants"],
        ["invariants", "--series", "2,3", "--bogus"],
        ["verify", "--n", "x"],
        ["resolve", "--series", "2,3", "--module", "1"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_console_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "nakayama", "invariants", "--series", "4,2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 2 and "error" in proc.stderr
