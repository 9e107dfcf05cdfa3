import json
import subprocess
import sys

import pytest

from wheelturan.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main, parse_range
from wheelturan.graph import decode_graph6, make_turan_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def payload(out):
    return json.loads(out)["result"]


def test_construct_turan(capsys, tmp_path):
    side = tmp_path / "side.json"
    code, out, _ = run(capsys, "construct", "turan", "--n", "11", "--r", "4", "--sidecar", str(side))
    assert code == EXIT_OK
    assert decode_graph6(out.strip()) == make_turan_graph(11, 4)
    meta = json.loads(side.read_text())
    assert (meta["order"], meta["edges"]) == (11, 45)


def test_construct_wheel_and_errors(capsys):
    code, out, _ = run(capsys, "construct", "wheel", "--m", "2", "--t", "5")
    assert code == EXIT_OK and decode_graph6(out.strip()).size == 16
    code, _, err = run(capsys, "construct", "cycle", "--t", "2")
    assert code == EXIT_USAGE and "cycle length" in err
    code, _, err = run(capsys, "construct", "turan", "--n", "5")
    assert code == EXIT_USAGE and "--r" in err
    code, out, _ = run(capsys, "construct", "multipartite", "--parts", "3,3,3,2")
    assert decode_graph6(out.strip()).size == 45


def test_detect(capsys):
    _, out, _ = run(capsys, "construct", "turan", "--n", "12", "--r", "4")
    g6 = out.strip()
    code, out, _ = run(capsys, "detect", "--graph", g6, "--m", "2", "--t", "5")
    assert code == EXIT_OK and payload(out) == {"contains": False, "order": 12, "edges": 54}
    code, out, _ = run(capsys, "detect", "--graph", "D~{", "--m", "2", "--t", "3")
    res = payload(out)
    assert res["contains"] and sorted(res["witness"]["hub"] + res["witness"]["cycle"]) == [0, 1, 2, 3, 4]
    code, _, _ = run(capsys, "detect", "--graph", "A_?", "--m", "2", "--t", "3")
    assert code == EXIT_USAGE


def test_detect_batch_file(capsys, tmp_path):
    f = tmp_path / "graphs.g6"
    f.write_text("D~{\nDFw\n\n")  # K_5, K_{2,3}
    code, out, _ = run(capsys, "detect", "--file", str(f), "--m", "0", "--t", "3")
    lines = [json.loads(ln) for ln in out.splitlines()]
    assert code == EXIT_OK
    assert [ln["result"]["contains"] for ln in lines] == [True, False]


def test_detect_stdin_round_trip():
    g6 = subprocess.run(
        [sys.executable, "-m", "wheelturan", "construct", "wheel", "--m", "2", "--t", "5"],
        capture_output=True, text=True, check=True,
    ).stdout
    proc = subprocess.run(
        [sys.executable, "-m", "wheelturan", "detect", "--m", "2", "--t", "5"],
        input=g6, capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["contains"] is True


def test_exact(capsys):
    code, out, _ = run(capsys, "--jobs", "1", "exact", "--n", "8", "--m", "1", "--t", "5")
    res = payload(out)
    assert code == EXIT_OK and res["value"] == 21 and res["witnesses"]
    code, _, err = run(capsys, "exact", "--n", "11", "--m", "2", "--t", "5")
    assert code == EXIT_USAGE and "allow_large" in err


def test_lower_bound_echoes_seed_and_is_deterministic(capsys):
    argv = ["--jobs", "1", "lower-bound", "--n", "9", "--m", "1", "--t", "5", "--budget", "100", "--restarts", "2", "--seed", "7"]
    _, out1, _ = run(capsys, *argv)
    _, out2, _ = run(capsys, *argv)
    r1, r2 = json.loads(out1), json.loads(out2)
    assert r1["seed"] == 7
    assert r1["result"] == r2["result"]
    assert r1["result"]["edges"] >= 27


def test_formula(capsys):
    code, out, _ = run(capsys, "formula", "--n", "11", "--m", "2", "--k", "3")
    res = payload(out)
    assert code == EXIT_OK
    assert (res["value"], res["threshold"], res["in_regime"]) == (45, 11, True)
    code, _, _ = run(capsys, "formula", "--n", "11", "--m", "0", "--k", "3")
    assert code == EXIT_USAGE


def test_check_proof_exit_codes(capsys):
    code, out, _ = run(capsys, "--jobs", "1", "check-proof", "--m", "2..4", "--k", "3..4", "--window", "10")
    rep = payload(out)
    assert code == EXIT_OK and rep["ok"]
    assert set(rep["per_check"]["degree_forcing"]) == {"pass", "fail", "failures"}


def test_check_proof_equality_findings_do_not_fail(capsys):
    code, out, _ = run(capsys, "check-proof", "--m", "6", "--k", "3", "--window", "10", "--checks", "pmax_equal,pmax_le")
    rep = payload(out)
    assert rep["per_check"]["pmax_equal"]["fail"] > 0
    assert code == EXIT_OK


def test_usage_errors(capsys):
    assert run(capsys)[0] == EXIT_USAGE
    assert run(capsys, "check-proof", "--m", "5..2")[0] == EXIT_USAGE
    assert run(capsys, "--jobs", "0", "formula", "--n", "1", "--m", "1", "--k", "3")[0] == EXIT_USAGE


def test_jobs_env(monkeypatch, capsys):
    monkeypatch.setenv("WHEELTURAN_JOBS", "nope")
    assert run(capsys, "formula", "--n", "1", "--m", "1", "--k", "3")[0] == EXIT_USAGE


def test_parse_range():
    assert parse_range("2..4") == [2, 3, 4]
    assert parse_range("7") == [7]


def test_check_proof_required_failure_exits_one(capsys, monkeypatch):
    import wheelturan.proofcheck as pc

    real = pc.check_residual_threshold

    def broken(n, m, k):
        r = real(n, m, k)
        return pc.CheckResult(r.name, r.point, r.lhs, r.rhs, n != 11)

    monkeypatch.setattr(pc, "check_residual_threshold", broken)
    code, out, _ = run(capsys, "--jobs", "1", "check-proof", "--m", "2", "--k", "3", "--window", "3")
    rep = payload(out)
    assert code == EXIT_FAIL
    assert rep["per_check"]["residual_threshold"]["failures"] == [
        {"point": {"m": 2, "k": 3, "n": 11}, "lhs": 9, "rhs": 8}
    ]
