"""CLI behavior: output formats, exit codes, reproducibility."""

import json
import shutil
import subprocess
import sys

import pytest

from gbkit import cli
from gbkit.adversary import build_remove_iii
from gbkit.analysis import run_trials, theorem_constant
from gbkit.core import Assignment, Configuration, evaluate
from gbkit.formats import (
    config_from_doc,
    config_to_grid,
    dump_json,
    load_board_family,
)
from gbkit.gallery import make_board, make_switches


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_minimax_human(capsys):
    code, out, err = run_cli(capsys, "minimax", "--board", "square", "--n", "3")
    assert code == 0
    assert out.splitlines()[0] == "5"
    assert err.startswith("# gbk minimax ")
    assert "n=3" in err and "jobs=1" in err


def test_minimax_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "minimax", "--board", "square", "--n", "3",
                           "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == 5 and doc["configs_scanned"] == 16
    board = make_board("square", n=3)
    family = make_switches(board, "rows_cols")
    witness = config_from_doc(board, doc["witness_config"])
    from gbkit.solvers import exact_max
    assert exact_max(board, family, witness).value == 5


def test_constants_output(capsys):
    code, out, _ = run_cli(capsys, "constants")
    assert code == 0
    assert "square_lower" in out and "0.797885" in out
    code, out, _ = run_cli(capsys, "constants", "--format", "json")
    doc = json.loads(out)
    assert len(doc) == 9
    assert doc["cube_upper"] == theorem_constant("cube_upper")


def test_eval_example(capsys):
    assignment = '{"row:1": -1, "row:2": 1, "col:1": 1, "col:2": 1}'
    code, out, _ = run_cli(capsys, "eval", "--board", "square", "--n", "2",
                           "--config", "all-plus", "--assignment", assignment)
    assert code == 0 and out.splitlines()[0] == "0"
    code, out, _ = run_cli(capsys, "eval", "--board", "square", "--n", "2",
                           "--config", "all-plus", "--assignment", assignment,
                           "--format", "json")
    assert json.loads(out) == {"value": 0}


def test_gen_round_trip_and_out_file(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "gen", "--board", "rotated_square", "--n", "4")
    assert code == 0
    board, family = load_board_family(json.loads(out))
    assert board.area == 12 and len(family.ids) == 8
    path = tmp_path / "board.json"
    code, out2, _ = run_cli(capsys, "gen", "--board", "rotated_square", "--n", "4",
                            "--out", str(path))
    assert code == 0 and out2 == ""
    assert path.read_text() == out


def test_byte_identical_json(capsys):
    argv = ("solve", "--board", "square", "--n", "4", "--config", "random:5",
            "--method", "greedy", "--seed", "9", "--format", "json")
    _, first, _ = run_cli(capsys, *argv)
    _, second, _ = run_cli(capsys, *argv)
    assert first == second
    assert first.endswith("\n")


def test_solve_methods_agree(capsys):
    base = ("solve", "--board", "square", "--n", "4", "--config", "random:5",
            "--format", "json")
    values = {}
    for method in ("exact", "split", "greedy", "local"):
        code, out, _ = run_cli(capsys, *base, "--method", method)
        assert code == 0
        doc = json.loads(out)
        values[method] = doc["value"]
        board = make_board("square", n=4)
        family = make_switches(board, "rows_cols")
        config = Configuration.random(board, 5)
        assert evaluate(board, family, config,
                        Assignment(doc["assignment"])) == doc["value"]
    assert values["exact"] == values["split"]
    assert values["greedy"] <= values["exact"]
    assert values["local"] <= values["exact"]


def test_solve_explicit_split_groups(capsys):
    code, out, _ = run_cli(capsys, "solve", "--board", "square", "--n", "3",
                           "--config", "random:2", "--method", "split",
                           "--enum", "col", "--greedy", "row", "--format", "json")
    assert code == 0
    code2, out2, _ = run_cli(capsys, "solve", "--board", "square", "--n", "3",
                             "--config", "random:2", "--format", "json")
    assert json.loads(out)["value"] == json.loads(out2)["value"]


def test_construct_remove_iii_grid(capsys):
    code, out, _ = run_cli(capsys, "construct", "remove-iii", "--n", "4",
                           "--a", "2", "--b", "2")
    assert code == 0
    assert out == config_to_grid(build_remove_iii(4, 2, 2))
    code, out, _ = run_cli(capsys, "construct", "remove-iii", "--n", "4",
                           "--a", "2", "--b", "2", "--format", "json")
    doc = json.loads(out)
    board = make_board("square", n=4)
    assert config_from_doc(board, doc["config"]) == build_remove_iii(4, 2, 2)


def test_construct_remove_ii_delta(capsys):
    code, out, _ = run_cli(capsys, "construct", "remove-ii", "--n", "8",
                           "--delta", "0.5", "--seed", "3", "--format", "json")
    assert code == 0
    board = make_board("square", n=8)
    config = config_from_doc(board, json.loads(out)["config"])
    for i in range(5, 9):
        for j in range(5, 9):
            assert config.value((i, j)) == -1


def test_construct_hard_config(capsys):
    code, out, _ = run_cli(capsys, "construct", "hard-config", "--board", "square",
                           "--n", "3", "--lam", "8.66", "--seed", "11",
                           "--max-tries", "400", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["certified_max"] <= 8.66 and doc["tries"] >= 1


def test_construct_hard_config_failure_exit(capsys):
    code, _, err = run_cli(capsys, "construct", "hard-config", "--board", "square",
                           "--n", "3", "--lam", "4", "--seed", "5",
                           "--max-tries", "5")
    assert code == 1
    assert "search failed" in err


def test_estimate_matches_library(capsys):
    code, out, _ = run_cli(capsys, "estimate", "--board", "square", "--n", "6",
                           "--strategy", "scramble-greedy", "--trials", "50",
                           "--seed", "12")
    assert code == 0
    board = make_board("square", n=6)
    family = make_switches(board, "rows_cols")
    stats = run_trials(board, family, "scramble-greedy", 50, 12,
                       scramble="col", greedy="row")
    assert out == dump_json(stats.to_doc())


def test_validation_exit_2(capsys):
    code, _, err = run_cli(capsys, "minimax", "--board", "heptagon", "--n", "3")
    assert code == 2 and "error:" in err
    code, _, err = run_cli(capsys, "minimax", "--board", "square")
    assert code == 2 and "--n" in err
    code, _, err = run_cli(capsys, "eval", "--board", "square", "--n", "2",
                           "--config", "nope.xyz")
    assert code == 2
    code, _, err = run_cli(capsys, "estimate", "--board", "square", "--n", "3",
                           "--strategy", "quantum", "--trials", "5", "--seed", "0")
    assert code == 2


def test_unknown_flag_exit_2():
    with pytest.raises(SystemExit) as info:
        cli.main(["minimax", "--board", "square", "--n", "3", "--frobnicate"])
    assert info.value.code == 2


def test_budget_exit_3(capsys):
    code, _, err = run_cli(capsys, "minimax", "--board", "square", "--n", "7",
                           "--config-cap", "1024")
    assert code == 3
    assert "required=68719476736" in err


def test_gbk_jobs_env(monkeypatch, capsys):
    monkeypatch.setenv("GBK_JOBS", "4")
    code, out, err = run_cli(capsys, "minimax", "--board", "square", "--n", "4")
    assert code == 0 and out.splitlines()[0] == "8"
    assert "jobs=4" in err


def test_console_script_entry():
    exe = shutil.which("gbk")
    assert exe, "gbk console script not installed"
    proc = subprocess.run([exe, "minimax", "--board", "square", "--n", "2"],
                          capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "2"


def test_serve_end_to_end(tmp_path):
    import socket
    import time

    import httpx

    with socket.socket() as s:
        s.bind(("127.0.0.1", 0))
        port = s.getsockname()[1]
    proc = subprocess.Popen(
        [sys.executable, "-m", "gbkit.cli", "serve", "--port", str(port)],
        stdout=subprocess.DEVNULL, stderr=subprocess.DEVNULL)
    try:
        base = f"http://127.0.0.1:{port}"
        deadline = time.time() + 30
        while True:
            try:
                resp = httpx.post(base + "/api/session", json={
                    "board_spec": {"kind": "square", "params": {"n": 2}}})
                break
            except httpx.TransportError:
                if time.time() > deadline:
                    raise
                time.sleep(0.2)
        assert resp.status_code == 200
        sid = resp.json()["session_id"]
        flip = httpx.post(f"{base}/api/session/{sid}/flip",
                          json={"switch_id": "row:1"})
        assert flip.json()["score"] == 0
    finally:
        proc.terminate()
        proc.wait(timeout=10)
