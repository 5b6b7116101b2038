import json
import os
import subprocess

CLI = os.environ["FACILIDYN_CLI"]


def run(*args, env=None):
    e = dict(os.environ)
    if env:
        e.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=e)


def test_classify_json():
    r = run("classify", "--h", "0.5", "--k", "1", "--sigma", "0.62", "--alpha", "14.42")
    assert r.returncode == 0
    j = json.loads(r.stdout)
    assert j["label"] == "P51"
    assert j["interior_equilibria"] == 2


def test_params_round_trip_keeps_label():
    j = json.loads(run("classify", "--h", "0.5", "--k", "1", "--sigma", "0.62", "--alpha", "14.3").stdout)
    p = j["params"]
    r = run("classify", "--h", repr(p["h"]), "--k", repr(p["k"]), "--sigma", repr(p["sigma"]), "--alpha", repr(p["alpha"]))
    assert json.loads(r.stdout)["label"] == j["label"]


def test_invalid_input_exit_code():
    assert run("classify", "--h", "0.5", "--k", "-1", "--sigma", "0.62", "--alpha", "14").returncode == 2
    assert run("classify", "--h", "0.5").returncode == 2
    assert run("nosuch").returncode == 2
    assert run("classify", "--h", "0.5", "--k", "1", "--sigma", "1", "--alpha", "1", env={"FACILIDYN_TOL": "x"}).returncode == 2


def test_equilibria_csv():
    r = run("equilibria", "--h", "0.5", "--k", "1", "--sigma", "0.62", "--alpha", "14.3")
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "role,x,y,trace,det,kind"
    assert len(lines) == 5


def test_simulate_svg_and_csv(tmp_path):
    out = tmp_path / "p.svg"
    r = run("simulate", "--h", "0.5", "--k", "5.5", "--sigma", "1", "--alpha", "0.1", "--x0", "2", "--y0", "1",
            "--t", "20", "--format", "svg", "--out", str(out))
    assert r.returncode == 0
    assert 'width="800"' in out.read_text()
    r = run("simulate", "--h", "0.5", "--k", "5.5", "--sigma", "1", "--alpha", "0.1", "--x0", "2", "--y0", "1",
            "--t", "5")
    assert r.stdout.splitlines()[0] == "t,x,y"


def test_curves_csv():
    r = run("curves", "--h", "0.5", "--k", "1", "--sigma-min", "0.56", "--sigma-max", "0.6", "--n", "3")
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "sigma,alpha_SN,alpha_H,alpha_HL"
    assert len(lines) == 4


def test_verify_quick():
    r = run("verify-paper", "--quick")
    assert r.returncode == 0
    assert json.loads(r.stdout)["pass"]
    assert "PASS" in r.stderr
