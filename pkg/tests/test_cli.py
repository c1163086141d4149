import json
from pathlib import Path

import pytest

from charp import cli

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_repro_T_json(capsys):
    code, out, _ = run(capsys, "repro", "--claim", "T", "--p", "2,3", "--json")
    assert code == cli.EXIT_OK
    obj = json.loads(out)
    assert obj["claims"][0]["overall"] == "verified"
    assert "perf" not in obj


def test_json_is_identical_across_threads(capsys):
    _, one, _ = run(capsys, "repro", "--claim", "known-fpurity", "--p", "2", "--json", "--threads", "1")
    _, four, _ = run(capsys, "repro", "--claim", "known-fpurity", "--p", "2", "--json", "--threads", "4")
    assert one == four


def test_common_flags_before_subcommand(capsys):
    code, out, _ = run(capsys, "--json", "repro", "--claim", "splits5")
    assert code == 0 and json.loads(out)["claims"][0]["overall"] == "verified"


def test_out_includes_perf(capsys, tmp_path):
    path = tmp_path / "cert.json"
    code, out, _ = run(capsys, "repro", "--claim", "Bn", "--out", str(path))
    assert code == 0
    assert "perf" in json.loads(path.read_bytes())
    assert "Bn" in out or "B" in out


def test_non_prime_is_usage_error(capsys):
    code, _, err = run(capsys, "repro", "--claim", "T", "--p", "4")
    assert code == cli.EXIT_USAGE
    assert "4 is not prime" in err


def test_unknown_claim_is_usage_error(capsys):
    assert run(capsys, "repro", "--claim", "Q")[0] == cli.EXIT_USAGE


def test_p_ignored_for_characteristic_free(capsys):
    code, _, err = run(capsys, "repro", "--claim", "splits6", "--p", "3")
    assert code == 0 and "ignored" in err


@pytest.mark.parametrize("name", ["T.charp", "A3.charp"])
def test_shipped_scripts_verify(capsys, name):
    assert run(capsys, "check", "--script", str(SCRIPTS / name))[0] == cli.EXIT_OK


def test_failing_script_exits_1(capsys):
    code, out, _ = run(capsys, "check", "--script", str(SCRIPTS / "offdiag4.charp"))
    assert code == cli.EXIT_FAIL
    assert "fails" in out


def test_budget_flag_gives_inconclusive(capsys):
    code, _, _ = run(capsys, "--budget", "1000", "check", "--script", str(SCRIPTS / "offdiag4.charp"))
    assert code == cli.EXIT_INCONCLUSIVE


def test_budget_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("CHARP_BUDGET", "1000")
    assert run(capsys, "check", "--script", str(SCRIPTS / "offdiag4.charp"))[0] == cli.EXIT_INCONCLUSIVE
    monkeypatch.setenv("CHARP_BUDGET", "lots")
    assert run(capsys, "check", "--script", str(SCRIPTS / "T.charp"))[0] == cli.EXIT_USAGE


def test_parse_error_exits_3(capsys, tmp_path):
    bad = tmp_path / "bad.charp"
    bad.write_text("ring p=2 vars x\npoly = x\n")
    code, _, err = run(capsys, "check", "--script", str(bad))
    assert code == cli.EXIT_USAGE
    assert "2:6" in err or "line 2" in err


def test_missing_script_exits_3(capsys, tmp_path):
    code, _, err = run(capsys, "check", "--script", str(tmp_path / "nope.charp"))
    assert code == cli.EXIT_USAGE and "cannot read" in err


def test_gb_and_dim(capsys, tmp_path):
    s = tmp_path / "s.charp"
    s.write_text("ring p=3 vars x y\nideal I = [x^2 - y, x*y]\n")
    code, out, _ = run(capsys, "gb", "--script", str(s), "--ideal", "I")
    assert code == 0 and "y^2" in out
    code, out, _ = run(capsys, "dim", "--script", str(s), "--ideal", "I")
    assert code == 0 and out.strip() == "0"
    assert run(capsys, "dim", "--script", str(s), "--ideal", "J")[0] == cli.EXIT_USAGE


def test_dim_of_T(capsys):
    code, out, _ = run(capsys, "dim", "--script", str(SCRIPTS / "T.charp"), "--ideal", "I")
    assert code == 0 and out.strip() == "14"


def test_jac(capsys, tmp_path):
    s = tmp_path / "s.charp"
    s.write_text("ring p=5 vars x y\npoly f = x^2*y\n")
    code, out, _ = run(capsys, "jac", "--script", str(s), "--polys", "f,x+y", "--vars", "x,y")
    assert code == 0
    assert out.splitlines() == ["[2*x*y, x^2]", "[1, 1]", "det = 4*x^2 + 2*x*y"]
    assert run(capsys, "jac", "--script", str(s), "--polys", "f", "--vars", "z")[0] == cli.EXIT_USAGE


def test_bad_threads(capsys):
    assert run(capsys, "--threads", "0", "repro", "--claim", "Bn")[0] == cli.EXIT_USAGE
