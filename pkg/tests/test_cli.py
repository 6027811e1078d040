import contextlib
import io
import json

import pytest

from homcount.cli import main
from homcount.graphs import (
    complete_graph,
    from_graph6,
    is_isomorphic,
    path_graph,
    star_graph,
    to_edge_list,
    to_graph6,
)


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {}
    paths["p3.g6"] = tmp_path / "p3.g6"
    paths["p3.g6"].write_text(to_graph6(path_graph(3)) + "\n")
    paths["k2.el"] = tmp_path / "k2.el"
    paths["k2.el"].write_text(to_edge_list(complete_graph(2)))
    paths["k3.el"] = tmp_path / "k3.el"
    paths["k3.el"].write_text(to_edge_list(complete_graph(3)))
    paths["k4.el"] = tmp_path / "k4.el"
    paths["k4.el"].write_text(to_edge_list(complete_graph(4)))
    paths["tmp"] = tmp_path
    return paths


def test_exponent_command(files):
    code, out, _ = run_cli(
        ["exponent", "--pattern", str(files["p3.g6"]), "--class", "outerplanar"]
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["exponent"] == 2 and rep["class"] == "outerplanar"


def test_exponent_hom_mode(files):
    code, out, _ = run_cli(
        ["exponent", "--pattern", str(files["p3.g6"]), "--class", "forests", "--mode", "hom"]
    )
    assert code == 0
    assert json.loads(out)["mode"] == "homomorphism"


def test_count_command(files):
    code, out, _ = run_cli(
        [
            "count",
            "--pattern", str(files["k2.el"]),
            "--host", str(files["k4.el"]),
            "--mode", "homomorphism",
        ]
    )
    assert code == 0 and out.strip() == "12"


def test_wedge_command_identity(files):
    code, out, _ = run_cli(
        ["wedge", "--pattern", str(files["p3.g6"]), "--collection", "[[0],[2]]", "--k", "1"]
    )
    assert code == 0
    assert is_isomorphic(from_graph6(out.strip()), path_graph(3))


def test_wedge_command_star_and_outfile(files):
    out_path = files["tmp"] / "w.el"
    code, _, _ = run_cli(
        [
            "wedge",
            "--pattern", str(files["p3.g6"]),
            "--collection", "[[0],[2]]",
            "--k", "3",
            "--out", str(out_path),
        ]
    )
    assert code == 0
    from homcount.graphs import from_edge_list

    assert is_isomorphic(from_edge_list(out_path.read_text()), star_graph(6))


def test_wedge_collection_file(files):
    coll_path = files["tmp"] / "c.json"
    coll_path.write_text(json.dumps([[0], [2]]))
    code, out, _ = run_cli(
        ["wedge", "--pattern", str(files["p3.g6"]), "--collection", str(coll_path), "--k", "2"]
    )
    assert code == 0
    assert is_isomorphic(from_graph6(out.strip()), star_graph(4))


def test_collections_command(files):
    code, out, _ = run_cli(
        ["collections", "--pattern", str(files["p3.g6"]), "--max-order", "1"]
    )
    assert code == 0
    data = json.loads(out)
    assert data["collections"][0]["flaps"] == [[0], [2]]
    assert {tuple(map(tuple, c["flaps"])) for c in data["collections"]} >= {((0,), (2,))}


def test_enumerate_command():
    code, out, _ = run_cli(["enumerate", "--class", "forests", "--n", "3"])
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 3
    assert all(from_graph6(ln).n == 3 for ln in lines)


def test_verify_command_with_config(files):
    cfg = files["tmp"] / "cfg.json"
    cfg.write_text(
        json.dumps(
            {
                "pattern": str(files["k2.el"]),
                "class": "forests",
                "mode": "subgraph",
                "n_range": [10, 60],
                "tolerance": 0.05,
                "ex_cap": 6,
            }
        )
    )
    csv_path = files["tmp"] / "series.csv"
    code, out, _ = run_cli(["verify", "--config", str(cfg), "--csv", str(csv_path)])
    assert code == 0
    rep = json.loads(out)
    assert rep["ok"] and rep["prediction"] == 1
    rows = csv_path.read_text().strip().splitlines()
    assert rows[0] == "n,count" and len(rows) > 3


def test_exit_code_usage(files):
    code, _, err = run_cli(
        ["exponent", "--pattern", str(files["p3.g6"]), "--class", "not-a-class"]
    )
    assert code == 2
    assert json.loads(err)["error"] == "usage"


def test_exit_code_not_in_class(files):
    code, _, err = run_cli(
        ["exponent", "--pattern", str(files["k3.el"]), "--class", "forests"]
    )
    assert code == 4
    assert json.loads(err)["error"] == "pattern_not_in_class"


def test_exit_code_budget(files):
    code, _, err = run_cli(
        [
            "--budget", "5",
            "count",
            "--pattern", str(files["p3.g6"]),
            "--host", str(files["k4.el"]),
            "--mode", "homomorphism",
        ]
    )
    assert code == 3
    assert json.loads(err)["error"] == "budget_exceeded"


def test_env_budget(files, monkeypatch):
    monkeypatch.setenv("HOMCOUNT_BUDGET", "5")
    code, _, _ = run_cli(
        ["count", "--pattern", str(files["p3.g6"]), "--host", str(files["k4.el"]),
         "--mode", "homomorphism"]
    )
    assert code == 3
    # flag overrides the environment
    code, out, _ = run_cli(
        ["--budget", "1000000", "count", "--pattern", str(files["p3.g6"]),
         "--host", str(files["k4.el"]), "--mode", "homomorphism"]
    )
    assert code == 0


def test_deterministic_output(files):
    argv = ["exponent", "--pattern", str(files["p3.g6"]), "--class", "outerplanar"]
    assert run_cli(argv)[1] == run_cli(argv)[1]


def test_missing_file_is_usage_error():
    code, _, err = run_cli(["exponent", "--pattern", "/nonexistent.g6", "--class", "planar"])
    assert code == 2
