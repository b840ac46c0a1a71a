import json

from click.testing import CliRunner

from zqlattice.cli import main


def run(*args, env=None):
    return CliRunner().invoke(main, list(args), env=env)


def test_even_p_is_usage_error():
    assert run("check", "--p", "4", "--N", "3").exit_code == 2


def test_caps_and_override():
    assert run("check", "--p", "11", "--N", "3", "--suite", "hopf").exit_code == 2
    assert run("check", "--p", "11", "--N", "3", "--suite", "hopf", "--allow-large").exit_code == 0
    assert run("check", "--p", "9", "--N", "3", "--suite", "hopf", "--allow-large").exit_code == 2


def test_bad_worker_env_is_usage_error():
    assert run("check", "--p", "3", "--N", "3", "--suite", "hopf", env={"ZQLATTICE_WORKERS": "x"}).exit_code == 2


def test_json_report_roundtrip():
    res = run("check", "--p", "3", "--N", "3", "--suite", "currents", "--format", "json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["p"] == 3 and data["N"] == 3
    assert json.loads(json.dumps(data)) == data
    k2 = next(r for r in data["suites"] if r["relation"] == "K2")
    assert k2["instances_checked"] == 3 * 9  # p^2 grid per edge


def test_relation_failure_exit_code():
    # the stated same-residue braid exponent fails
    assert run("check", "--p", "3", "--N", "3", "--suite", "vertex").exit_code == 1


def test_shiftop_even_N():
    res = run("shiftop", "--p", "3", "--N", "2")
    assert res.exit_code == 2 and "odd" in res.output


def test_shiftop_json():
    res = run("shiftop", "--p", "3", "--N", "3")
    assert res.exit_code == 0
    ops = {o["chirality"]: o for o in json.loads(res.output)["operators"]}
    assert len(ops["r"]["z_coeffs"]) == 3 and len(ops["r"]["rho_coefficients"]) == 3


def test_simulate_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for out in (a, b):
        assert run("simulate", "--sites", "16", "--steps", "16", "--init", "random(1)", "--out", str(out)).exit_code == 0
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().splitlines()
    assert lines[0] == "t_index,site,value"
    assert "# verdict" in lines


def test_simulate_constant_json(tmp_path):
    out = tmp_path / "c.json"
    assert run("simulate", "--sites", "5", "--steps", "3", "--init", "constant", "--out", str(out), "--format", "json").exit_code == 0
    data = json.loads(out.read_text())
    assert {v for sl in data["trajectory"] for v in sl} == {"1/1"}


def test_simulate_bad_init_and_path(tmp_path):
    assert run("simulate", "--sites", "5", "--steps", "3", "--init", "wave", "--out", str(tmp_path / "x")).exit_code == 2
    assert run("simulate", "--sites", "5", "--steps", "3", "--out", str(tmp_path / "no" / "x.csv")).exit_code == 2
