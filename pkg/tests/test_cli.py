import json
import subprocess
import sys

import pytest

from kslab.cli import SCHEMA, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    assert code == 0, err
    data = json.loads(out)
    assert data["schema"] == SCHEMA and data["command"] == argv[0]
    return data


def test_dirichlet(capsys):
    code, out, _ = run(capsys, "dirichlet", "--boundary", "x^2/4 + y^2 - 1", "--data", "x^2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "4/5 + 4/5*x^2 - 4/5*y^2"
    assert "(-1 + 1/4*x^2 + y^2)*(4/5)" in out


def test_ks_scan_unit_circle(capsys):
    code, out, _ = run(capsys, "ks-scan", "--f", "z*w - 1", "--max-monomial", "4", "--max-cofactor", "4")
    assert code == 0
    assert "verdict: consistent-with-KS" in out
    assert "z^2*w^2 = (-1 + z*w)*(1 + z*w) + (1) + (0)" in out


def test_ks_scan_json(capsys):
    data = run_json(capsys, "ks-scan", "--f", "z^2 + w^3 - 5", "--max-monomial", "3", "--max-cofactor", "2")
    assert data["verdict"] == "refuted-at-bound"
    statuses = {o["status"] for o in data["outcomes"]}
    assert "bounded-failure" in statuses
    bad = next(o for o in data["outcomes"] if o["status"] == "bounded-failure")
    assert set(bad["rank_data"]) == {"K", "rank", "augmented_rank", "nullity", "unsatisfied"}


def test_quartic_check(capsys):
    code, out, _ = run(capsys, "quartic-check", "--F", "1", "--G", "1")
    assert code == 0
    assert "derived:  r^4 - 4*r^2" in out
    assert "printed:  r^4 - 8*r^2" in out
    assert "agree: no" in out
    code2, out2, _ = run(capsys, "quartic-check", "--F", "1", "--G", "1")
    assert out2 == out


def test_fischer_solve(capsys):
    code, out, _ = run(capsys, "fischer-solve", "--f", "zw - 1", "--phi", "z^2w")
    assert code == 0 and "z^2*w = (-1 + z*w)*(z) + (z) + (0)" in out
    data = run_json(capsys, "fischer-solve", "--f", "z^2 + w^3 - 5", "--phi", "zw", "--max-cofactor-deg", "3")
    assert data["status"] == "bounded-failure"


def test_harmonic_divisor(capsys):
    data = run_json(capsys, "harmonic-divisor", "--f", "z + w", "--max-deg", "1")
    assert data["witness"]["product"] == "z^2 - w^2"
    data = run_json(capsys, "harmonic-divisor", "--f", "zw - 1", "--max-deg", "6")
    assert data["witness"] is None


def test_refute_zeros(capsys):
    data = run_json(capsys, "ks-refute-zeros", "--f", "z^2 + w^3 - 5", "--p", "7", "--max-ext", "6")
    wit = data["verdict"]["witness"]["zero_pair"]
    assert list(wit) == ["p", "k", "modulus", "a", "b", "deg_a", "deg_b", "containment", "f"]
    assert (wit["deg_a"], wit["deg_b"], wit["containment"]) == (2, 3, "neither")


def test_refute_zeros_budget_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("KSLAB_ENUM_CAP", "10")
    code, _, err = run(capsys, "ks-refute-zeros", "--f", "z^2 + w^3 - 5", "--p", "7", "--max-ext", "6")
    assert code == 2 and "cap" in err


def test_gcd_reflect_conic(capsys):
    code, out, _ = run(capsys, "gcd", "--a", "z^2 - w^2", "--b", "z - w")
    assert code == 0 and out.startswith("gcd = z - w")
    code, out, _ = run(capsys, "reflect", "--p", "(1+i)z^2w + 3w^2")
    assert out.splitlines()[0] == "3*z^2 + (1-i)*z*w^2"
    code, out, _ = run(capsys, "classify-conic", "--p", "xy - 1")
    assert out.strip().endswith("hyperbola")


def test_modp_transfer(capsys):
    data = run_json(capsys, "modp-transfer", "--f", "zw - 1", "--p", "7")
    assert data["status"] == "ok" and data["image"] == "6 + z*w"
    data = run_json(capsys, "modp-transfer", "--f", "zw + 5", "--p", "5")
    assert data["status"] == "rejected" and data["dying"] == [[0, 0]]


def test_propkey_json_is_deterministic(capsys):
    argv = ["propkey-sample", "--p", "5", "--k", "4", "--trials", "40", "--seed", "3", "--json"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first
    assert json.loads(first)["violations"] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["gcd", "--a", "z +", "--b", "w"],
        ["fischer-solve", "--f", "z"],
        ["reflect", "--p", "t*z"],
        ["ks-refute-zeros", "--f", "z", "--p", "8", "--max-ext", "2"],
        ["ks-scan", "--f", "zw", "--max-monomial", "x", "--max-cofactor", "1"],
        ["nonsense"],
        [],
    ],
)
def test_usage_and_parse_errors_exit_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert out == ""
    assert err


def test_parse_error_shows_position(capsys):
    code, _, err = run(capsys, "gcd", "--a", "z + $", "--b", "w")
    assert code == 1 and "at position 4" in err and "^" in err


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "kslab", "gcd", "--a", "zw - 1", "--b", "z + w", "--json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["gcd"] == "1"
    proc = subprocess.run([sys.executable, "-m", "kslab", "gcd", "--a", "(", "--b", "w"], capture_output=True, text=True)
    assert proc.returncode == 1
