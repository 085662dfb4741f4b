import csv
import json

from stardecomp.cli import main
from stardecomp.embedding import EmbeddingCertificate
from stardecomp.graphs import complete_graph, graph_from_edges, write_graph
from stardecomp.solver import StarDecomposition, validate_decomposition


def run(args):
    return main(args)


def test_decompose_complete_k6(tmp_path, capsys):
    out = tmp_path / "dec.json"
    assert run(["decompose", "--complete", "6", "--k", "3", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["exists"] is True
    dec = StarDecomposition.from_json_dict(data["decomposition"])
    assert len(dec.stars) == 5
    assert validate_decomposition(complete_graph(6), dec) is None


def test_decompose_complete_none_exists(tmp_path):
    out = tmp_path / "dec.json"
    assert run(["decompose", "--complete", "5", "--k", "3", "--out", str(out)]) == 0
    assert json.loads(out.read_text()) == {"exists": False, "n": 5, "k": 3}


def test_decompose_graph_two_star(tmp_path):
    g = graph_from_edges(6, [(0, 1), (0, 2), (0, 3), (3, 4)])
    gpath = tmp_path / "g.json"
    write_graph(g, gpath)
    out = tmp_path / "out.json"
    assert run(["decompose", "--graph", str(gpath), "--k", "2", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["exists"] is True


def test_decompose_graph_two_star_parity_witness(tmp_path):
    g = graph_from_edges(4, [(0, 1), (1, 2), (0, 2)])
    gpath = tmp_path / "g.txt"
    write_graph(g, gpath)
    out = tmp_path / "out.json"
    assert run(["decompose", "--graph", str(gpath), "--k", "2", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data == {"exists": False, "odd_components": [[0, 1, 2]]}


def test_decompose_with_gamma_and_dot(tmp_path):
    gpath = tmp_path / "g.json"
    write_graph(complete_graph(6), gpath)
    gamma = tmp_path / "gamma.json"
    gamma.write_text("[1, 1, 1, 1, 1, 0]\n")
    out = tmp_path / "out.json"
    dot = tmp_path / "out.dot"
    code = run(
        [
            "decompose",
            "--graph", str(gpath),
            "--k", "3",
            "--gamma", str(gamma),
            "--out", str(out),
            "--dot", str(dot),
        ]
    )
    assert code == 0
    assert json.loads(out.read_text())["exists"] is True
    assert dot.read_text().startswith("graph stars {")


def test_decompose_gamma_witness(tmp_path):
    gpath = tmp_path / "g.json"
    write_graph(graph_from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]), gpath)
    gamma = tmp_path / "gamma.json"
    gamma.write_text("[1, 1, 1, 0, 0, 0]\n")
    out = tmp_path / "out.json"
    assert run(["decompose", "--graph", str(gpath), "--k", "2", "--gamma", str(gamma), "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["exists"] is False
    assert data["witness"]["delta"] < 0


def test_decompose_search_budget_exit_code(tmp_path, monkeypatch):
    # an infeasible join with 7 candidate center functions: budget 2 trips
    from stardecomp.graphs import join

    gpath = tmp_path / "g.json"
    write_graph(join(graph_from_edges(8, [(0, 1)]), 2), gpath)
    out = tmp_path / "out.json"
    code = run(["decompose", "--graph", str(gpath), "--k", "3", "--budget", "2", "--out", str(out)])
    assert code == 2
    # the environment override kicks in when no flag is given
    monkeypatch.setenv("STARDEC_BUDGET", "2")
    assert run(["decompose", "--graph", str(gpath), "--k", "3", "--out", str(out)]) == 2
    monkeypatch.setenv("STARDEC_BUDGET", "50")
    assert run(["decompose", "--graph", str(gpath), "--k", "3", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["exists"] is False


def test_decompose_malformed_input(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("not a graph\n")
    assert run(["decompose", "--graph", str(bad), "--k", "2"]) == 1
    assert "error:" in capsys.readouterr().err


def test_embed_single_edge(tmp_path):
    gpath = tmp_path / "leave.json"
    write_graph(graph_from_edges(8, [(0, 1)]), gpath)
    out = tmp_path / "cert.json"
    assert run(["embed", "--leave", str(gpath), "--k", "3", "--out", str(out)]) == 0
    cert = EmbeddingCertificate.from_json_dict(json.loads(out.read_text()))
    assert cert.s == 4
    assert cert.minimality == "exact"
    assert {r.s: r.reason for r in cert.rejections}[2] == "exhausted-nonexistence"


def test_embed_max_s_exhausted(tmp_path, capsys):
    gpath = tmp_path / "leave.json"
    write_graph(graph_from_edges(8, [(0, 1)]), gpath)
    assert run(["embed", "--leave", str(gpath), "--k", "3", "--max-s", "2"]) == 2


def test_family_verify_single_edge(tmp_path):
    out = tmp_path / "report.json"
    code = run(
        ["family", "--id", "single-edge", "--k", "3", "--n", "8", "--verify", "--out", str(out)]
    )
    assert code == 0
    data = json.loads(out.read_text())
    assert data["all_ok"] is True
    assert data["family_id"] == "single-edge"


def test_family_generate_without_verify(tmp_path):
    out = tmp_path / "inst.json"
    assert run(["family", "--id", "even-bound", "--t", "3", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["n"] == 28
    assert data["leave"]["n"] == 28


def test_family_bad_parameters(capsys):
    assert run(["family", "--id", "single-edge", "--k", "4", "--n", "10"]) == 1


def test_family_verify_odd_bound(tmp_path):
    out = tmp_path / "report.json"
    assert run(["family", "--id", "odd-bound", "--k", "27", "--verify", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["all_ok"] is True
    statuses = {c["kind"]: c["status"] for c in data["claims"]}
    assert statuses["leave-realizable"] == "verified"


def test_bounds_csv(tmp_path):
    out = tmp_path / "bounds.csv"
    assert run(["bounds", "--k", "8", "--n", "6:10", "--out", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("# stardecomp bounds v1\n")
    rows = list(csv.DictReader(text.splitlines()[1:]))
    assert len(rows) == 5
    by_n = {row["n"]: row for row in rows}
    assert by_n["9"]["n_threshold"] == "8.000000"
    assert by_n["9"]["n_above_threshold"] == "1"
    assert by_n["8"]["n_above_threshold"] == "0"
    assert by_n["9"]["large_n_cap"] == "22"


def test_bounds_without_n(tmp_path):
    out = tmp_path / "bounds.csv"
    assert run(["bounds", "--k", "8", "--out", str(out)]) == 0
    rows = list(csv.DictReader(out.read_text().splitlines()[1:]))
    assert rows[0]["n"] == ""
    assert rows[0]["n_threshold"] == "8.000000"


def test_sweep_small_grid(tmp_path):
    out = tmp_path / "sweep.csv"
    code = run(
        ["sweep", "--k", "3", "--n", "4:6", "--seeds", "2", "--out", str(out)]
    )
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("# stardecomp sweep v1")
    rows = list(csv.DictReader(lines[1:]))
    assert len(rows) == 6
    assert all(row["within_general_cap"] == "1" for row in rows)
    assert [int(r["n"]) for r in rows] == [4, 4, 5, 5, 6, 6]


def test_sweep_worker_pool_matches_serial(tmp_path):
    serial = tmp_path / "serial.csv"
    pooled = tmp_path / "pooled.csv"
    args = ["sweep", "--k", "3", "--n", "4:6", "--seeds", "2"]
    assert run(args + ["--out", str(serial)]) == 0
    assert run(args + ["--jobs", "2", "--out", str(pooled)]) == 0

    def strip_runtime(path):
        rows = list(csv.DictReader(path.read_text().splitlines()[1:]))
        for row in rows:
            row.pop("runtime_ms")
        return rows

    assert strip_runtime(serial) == strip_runtime(pooled)


def test_sweep_deterministic_apart_from_runtime(tmp_path):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    args = ["sweep", "--k", "2,3", "--n", "4:6", "--seeds", "2"]
    assert run(args + ["--out", str(out1)]) == 0
    assert run(args + ["--out", str(out2)]) == 0

    def strip_runtime(path):
        rows = list(csv.DictReader(path.read_text().splitlines()[1:]))
        for row in rows:
            row.pop("runtime_ms")
        return rows

    assert strip_runtime(out1) == strip_runtime(out2)


def test_decompose_outputs_byte_identical(tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    run(["decompose", "--complete", "8", "--k", "2", "--out", str(out1)])
    run(["decompose", "--complete", "8", "--k", "2", "--out", str(out2)])
    assert out1.read_bytes() == out2.read_bytes()


def test_embed_round_trips_through_reader(tmp_path):
    gpath = tmp_path / "leave.json"
    write_graph(graph_from_edges(6, [(0, 1), (2, 3)]), gpath)
    out = tmp_path / "cert.json"
    assert run(["embed", "--leave", str(gpath), "--k", "2", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    cert = EmbeddingCertificate.from_json_dict(data)
    assert cert.to_json_dict() == data
