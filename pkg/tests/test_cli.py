import json

import pytest

from pastrev import GF, QQ, Matrix, Poly, Vector
from pastrev.cli import run
from pastrev.verifier import LawReport, recheck


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_spec_invocations(capsys):
    assert call(capsys, "vec", "reverse", "--field", "q", "1,2,3") == (0, "3,2,1\n", "")
    code, out, err = call(capsys, "vec", "decompose", "--field", "gf:2", "1,0")
    assert code == 2 and out == "" and "characteristic 2: decomposition undefined" in err
    code, out, _ = call(capsys, "verify", "--law", "M-det-sign", "--field", "gf:5", "--n", "4",
                        "--trials", "200", "--seed", "7")
    report = LawReport.from_json(json.loads(out))
    assert code == 0 and report.status == "pass" and report.cases_checked == 200


@pytest.mark.parametrize("argv, parse", [
    (["vec", "reverse", "1,-2,3/4"], lambda d: Vector.from_json(d, QQ)),
    (["vec", "paste", "1", "2,3", "--field", "gf:5"], lambda d: Vector.from_json(d, GF(5))),
    (["vec", "basis", "--n", "5", "--mode", "anti"], lambda d: [Vector.from_json(x, QQ) for x in d]),
    (["poly", "paste", "1,2", "3", "--n", "1", "--m", "0"], lambda d: Poly.from_json(d, QQ)),
    (["mat", "reverse", "--mode", "full", "1,2;3,4"], lambda d: Matrix.from_json(d, QQ)),
    (["mat", "inv", "1,2;3,4"], lambda d: Matrix.from_json(d, QQ)),
    (["transform", "charpoly", "--n", "5"], lambda d: Poly.from_json(d, QQ)),
    (["crossn", "1,0,0,0;0,1,0,0;0,0,1,0"], lambda d: Vector.from_json(d, QQ)),
])
def test_json_round_trip(capsys, argv, parse):
    code, out, _ = call(capsys, *argv, "--json")
    assert code == 0
    data = json.loads(out)
    value = parse(data)
    assert json.loads(json.dumps(value.to_json() if hasattr(value, "to_json") else
                                 [v.to_json() for v in value])) == data


def test_decompose_json(capsys):
    code, out, _ = call(capsys, "mat", "decompose", "--mode", "rc", "1,2;3,4", "--json")
    parts = {k: Matrix.from_json(v, QQ) for k, v in json.loads(out).items()}
    assert code == 0 and sorted(parts) == ["aa", "ap", "pa", "pp"]
    assert parts["pp"] + parts["pa"] + parts["ap"] + parts["aa"] == Matrix.parse("1,2;3,4", QQ)


def test_file_input(capsys, tmp_path):
    path = tmp_path / "ops.json"
    path.write_text(json.dumps([{"rows": 2, "cols": 2, "entries": [["1", "2"], ["3", "4"]]}]))
    assert call(capsys, "mat", "det", "--file", str(path)) == (0, "-2\n", "")
    path.write_text("[1, 2")
    code, _, err = call(capsys, "mat", "det", "--file", str(path))
    assert code == 2 and "invalid JSON" in err


@pytest.mark.parametrize("argv, fragment", [
    (["vec", "dot", "1,2"], "expected 2 operand"),
    (["vec", "reverse", "1,x"], "not a rational"),
    (["mat", "reverse", "1,2"], "needs --mode"),
    (["mat", "det", "--mode", "rows", "1"], "takes no --mode"),
    (["mat", "det", "1,2;3,4", "--field", "gf:4"], "prime"),
    (["mat", "inv", "1,2;2,4"], "singular"),
    (["verify", "--law", "nope"], "unknown law"),
    (["verify"], "exactly one"),
    (["verify", "--law", "V1", "--field", "f64"], "exact"),
    (["verify", "--law", "M11", "--field", "gf:3", "--budget", "10"], "budget"),
    (["transform", "exchange"], "--n is required"),
    (["frobnicate"], "invalid choice"),
])
def test_usage_errors(capsys, argv, fragment):
    code, out, err = call(capsys, *argv)
    assert code == 2 and out == ""
    assert fragment in err.lower() or fragment in err


def test_negative_operands(capsys):
    assert call(capsys, "vec", "reverse", "-1,2") == (0, "2,-1\n", "")
    assert call(capsys, "mat", "trace", "-1,2;3,-4") == (0, "-5\n", "")


def test_verify_witness_replays(capsys):
    code, out, _ = call(capsys, "verify", "--law", "T-Fp-injective", "--field", "gf:3")
    report = LawReport.from_json(json.loads(out))
    assert code == 0 and report.status == "fail" and recheck(report)


def test_verify_unexpected_violation_exit_1(capsys, monkeypatch):
    from pastrev.verifier import laws

    law = laws.CATALOG["V1"]
    monkeypatch.setitem(laws.CATALOG, "V1", law.__class__(**{**law.__dict__, "predicate": lambda c, v: v.is_zero()}))
    code, out, _ = call(capsys, "verify", "--law", "V1", "--field", "gf:2", "--n", "1")
    assert code == 1 and json.loads(out)["status"] == "fail"


def test_suite_outputs(capsys):
    code, out, _ = call(capsys, "verify", "--suite", "--field", "q", "--trials", "5", "--json")
    reports = [LawReport.from_json(r) for r in json.loads(out)]
    assert code == 0 and len(reports) == len(json.loads(out)) > 40
    code, out, _ = call(capsys, "verify", "--suite", "--field", "q", "--trials", "5")
    assert code == 0 and out.rstrip().endswith("OK")
