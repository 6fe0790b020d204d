import json

import pytest

from mllnets.cli import main, run

from conftest import CROSS, DOUBLE_PAR, TENSOR_AXIOM, THETA1


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in {
        "cross": CROSS,
        "theta1": THETA1,
        "theta2": THETA1.replace("tensor 1 4 5", "par 1 4 5").replace(
            "par 3 2 6", "tensor 3 2 6"
        ),
        "tensor_axiom": TENSOR_AXIOM,
        "double_par": DOUBLE_PAR,
        "skeleton": THETA1,
        "bad": "ax 1\n",
    }.items():
        p = tmp_path / f"{name}.mll"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def test_check_net(files):
    code, out = run(["check", files["cross"]])
    assert code == 0 and out == "proof net"


def test_check_non_net(files):
    code, out = run(["check", files["tensor_axiom"]])
    assert code == 1
    assert "not a proof net" in out
    assert "failing switching" in out and "cycle" in out


def test_check_mix(files):
    code, out = run(["check", "--mix", files["double_par"]])
    assert code == 0 and out == "MIX-correct"
    code, _ = run(["check", files["double_par"]])
    assert code == 1


def test_seq(files):
    code, out = run(["seq", files["cross"]])
    assert code == 0 and out.splitlines()[0] == "sequentializable"
    code, out = run(["seq", files["tensor_axiom"]])
    assert code == 1 and out == "not sequentializable"


def test_empire(files):
    code, out = run(["empire", files["theta1"], "5"])
    assert code == 0
    assert out.splitlines()[0] == "empire of 5: 1 2 3 4 5 6"
    sat = run(["empire", files["theta1"], "5", "--strategy", "sat"])
    assert sat == (code, out)


def test_dist(files):
    code, out = run(["dist", files["theta1"], files["theta2"]])
    assert code == 0 and out == "d = 2"


def test_family(files):
    code, out = run(["family", files["skeleton"]])
    assert code == 0
    assert "proof nets: 2 (2 up to equality)" in out
    assert "PS-connected: True" in out


def test_family_report(files):
    code, out = run(["family", files["skeleton"], "--report"])
    assert code == 0
    assert "family distance: 2" in out
    assert "FAIL" not in out and "PASS" in out


def test_path(files):
    code, out = run(["path", files["theta1"], files["theta2"]])
    assert code == 0 and out.splitlines()[0] == "hops: 1"


def test_sweep():
    code, out = run(["sweep", "--max-axioms", "1", "--max-mult", "1"])
    assert code == 0 and out.splitlines()[0] == "skeletons: 3"


def test_codes():
    code, out = run(["codes", "--hamming74"])
    assert code == 0 and out == "|C|=16, d(C)=3"
    code, out = run(["codes", "--dist", "00110", "10011"])
    assert code == 0 and out == "d = 3"


def test_json_schema_and_round_trip(files):
    code, out = run(["--json", "check", files["cross"]])
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"kind", "input", "result", "diagnostics"}
    assert payload["kind"] == "check"
    assert payload["result"] == {"proofNet": True}
    assert payload["diagnostics"] == []
    assert json.loads(json.dumps(payload)) == payload


def test_json_family_report_round_trip(files):
    code, out = run(["--json", "family", files["skeleton"], "--report"])
    assert code == 0
    payload = json.loads(out)
    from mllnets.analysis import verify_family
    from mllnets.family import parse_skeleton

    report = verify_family(parse_skeleton(THETA1))
    assert payload["result"] == json.loads(json.dumps(report.as_dict()))


def test_parse_error_diagnostics(files):
    code, out = run(["--json", "check", files["bad"]])
    assert code == 2
    payload = json.loads(out)
    (diag,) = payload["diagnostics"]
    assert diag["code"] == "StructureSyntaxError"
    assert diag["location"] == "line 1"
    assert payload["result"] is None


def test_missing_file_is_exit_2(tmp_path):
    code, out = run(["check", str(tmp_path / "nope.mll")])
    assert code == 2 and "error" in out


def test_usage_error():
    code, _ = run(["frobnicate"])
    assert code == 2
    code, _ = run([])
    assert code == 2


def test_determinism(files):
    a = run(["family", files["skeleton"], "--report"])
    b = run(["family", files["skeleton"], "--report"])
    assert a == b


def test_main_prints(files, capsys):
    assert main(["check", files["cross"]]) == 0
    assert capsys.readouterr().out.strip() == "proof net"
    assert main(["check", files["bad"]]) == 2
    assert "error" in capsys.readouterr().err
