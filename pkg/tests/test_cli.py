import io
import json
import subprocess
import sys

import pytest

from fibpoly.cli import PolyRecord, main
from fibpoly.factorization import build_f, phi_poly
from fibpoly.poly_core import IntXPoly


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["fib", "--n", "5", "--symbolic"], "a^4 - 3*a^2*b + b^2"),
        (["fib", "--n", "10"], "55"),
        (["fib", "--n", "6", "--a", "-1", "--b", "-1"], "-8"),
        (["lucas", "--n", "5"], "11"),
        (["lucas", "--n", "2", "--symbolic"], "a^2 - 2*b"),
        (["n-value", "--n", "2"], "11"),
        (["f-poly", "--m1", "5", "--a", "-1", "--b", "-1"], "x^10 + 11*x^5 - 1"),
        (["f-poly", "--m1", "2"], "x^4 - (a^2 - 2*b)*x^2 + b^2"),
        (["cofactor", "--m1", "3", "--a", "-1", "--b", "-1"], "x^4 - x^3 + 2*x^2 + x + 1"),
        (["phi", "--d", "4", "--a", "-1", "--b", "-1"], "x^4 + 3*x^2 + 1"),
        (["power-map", "--poly", "1,-1,-2,1", "--m1", "3"], "x^9 - 4*x^6 - 11*x^3 + 1"),
        (["quotient", "--poly", "1,-1,-2,1", "--m1", "2"], "x^3 + x^2 - 2*x - 1"),
    ],
)
def test_text_output(argv, expected):
    code, out, _ = run(*argv)
    assert code == 0
    assert out == expected + "\n"


def test_factor_table_text():
    code, out, _ = run("factor-table", "--max", "6", "--a", "-1", "--b", "-1")
    assert code == 0
    lines = out.splitlines()
    assert "f_6(x) = x^12 - 18*x^6 + 1" in lines
    assert "  = Phi_1*Phi_2*Phi_3*Phi_6" in lines
    assert "Phi_5(x) = x^8 - x^7 + 2*x^6 - 3*x^5 + 5*x^4 + 3*x^3 + 2*x^2 + x + 1" in lines


def test_json_records_roundtrip():
    code, out, _ = run("factor-table", "--max", "8", "--json")
    assert code == 0
    records = [PolyRecord.from_json(line) for line in out.splitlines()]
    assert len(records) == 24
    for rec, line in zip(records, out.splitlines()):
        assert rec.to_json() == line
        assert len(rec.coeffs) == rec.to_poly().deg + 1
        assert str(rec.to_poly()) == rec.pretty
    phi8 = [r for r in records if r.kind == "phi" and r.index == 8][0]
    assert phi8.to_poly() == phi_poly(8)


def test_json_specialized_coefficients_are_strings():
    code, out, _ = run("f-poly", "--m1", "60", "--a", "3", "--b", "-7", "--json")
    assert code == 0
    rec = json.loads(out)
    assert rec["params"] == {"a": "3", "b": "-7"}
    assert all(isinstance(c, str) for c in rec["coeffs"])
    poly = PolyRecord.from_json(out).to_poly()
    assert poly == build_f(60).specialize(3, -7)
    assert max(abs(c) for c in poly.coeffs) > 2**64


def test_json_power_map():
    code, out, _ = run("power-map", "--poly", "1,-1,-2,1", "--m1", "5", "--json")
    rec = PolyRecord.from_json(out)
    assert rec.kind == "power_map"
    assert rec.params == {"poly": ["1", "-1", "-2", "1"]}
    assert rec.to_poly() == IntXPoly.from_leading_first([1, 0, 0, 0, 0, -16, 0, 0, 0, 0, -57, 0, 0, 0, 0, 1])


def test_json_value_record():
    code, out, _ = run("fib", "--n", "100", "--json")
    assert json.loads(out) == {
        "index": 100,
        "kind": "fib",
        "params": None,
        "value": "354224848179261915075",
    }


def test_deterministic_output():
    argv = ("factor-table", "--max", "10", "--json")
    assert run(*argv)[1] == run(*argv)[1]


@pytest.mark.parametrize(
    "argv",
    [
        ["f-poly", "--m1", "0"],
        ["f-poly", "--m1", "3", "--a", "1"],
        ["power-map", "--poly", "2,1", "--m1", "2"],
        ["power-map", "--poly", "1,x", "--m1", "2"],
        ["n-value", "--n", "0"],
        ["fib", "--n", "3", "--symbolic", "--a", "1", "--b", "1"],
        ["verify"],
        ["no-such-command"],
        ["f-poly"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    code, _, err = run(*argv)
    assert code == 2
    assert err.count("\n") <= 1


def test_identity_violation_exit_1(monkeypatch):
    import fibpoly.cli as cli

    monkeypatch.setattr(cli.fz, "verify_theorem", lambda k: False)
    code, out, err = run("cofactor", "--m1", "4")
    assert code == 1
    assert "identity violation" in err


def test_verify_failure_reports_and_exits_1(monkeypatch):
    import fibpoly.cli as cli

    monkeypatch.setattr(cli.fz, "verify_divides", lambda n: n != 3)
    code, out, _ = run("verify", "--all", "--max", "8")
    assert code == 1
    assert "FAIL  x^2+x-1 divides, n=1..4" in out.splitlines()


def test_verify_all_max_40():
    code, out, _ = run("verify", "--all", "--max", "40")
    assert code == 0
    assert out.count("PASS") == len(out.splitlines()) == 9


def test_verify_json():
    code, out, _ = run("verify", "--m1", "6", "--json")
    assert code == 0
    assert all(json.loads(line)["passed"] for line in out.splitlines())


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fibpoly", "f-poly", "--m1", "3", "--a", "-1", "--b", "-1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "x^6 + 4*x^3 - 1\n"
