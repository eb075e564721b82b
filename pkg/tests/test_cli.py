from __future__ import annotations

import io
import json

import pytest

from bchromatic.cli import main
from bchromatic.generators import gen_clique_partition_extremal
from bchromatic.graph import complete_graph, cycle_graph, to_dimacs


@pytest.fixture
def write(tmp_path):
    def _write(g, name="g.col"):
        path = tmp_path / name
        path.write_text(to_dimacs(g))
        return str(path)
    return _write


def test_phi(write, capsys):
    assert main(["phi", write(complete_graph(4))]) == 0
    assert "phi = 4" in capsys.readouterr().out


def test_generate_then_phi_via_stdin(capsys, monkeypatch):
    assert main(["generate", "bipartite", "3"]) == 0
    dimacs = capsys.readouterr().out
    monkeypatch.setattr("sys.stdin", io.StringIO(dimacs))
    assert main(["phi", "-"]) == 0
    assert "phi = 3" in capsys.readouterr().out


def test_generate_to_file_writes_sidecar(tmp_path, capsys):
    out = tmp_path / "chain.col"
    assert main(["generate", "k1t", "3", "2", "-o", str(out)]) == 0
    sidecar = json.loads((tmp_path / "chain.col.json").read_text())
    assert sidecar["results"][0]["claimed_phi"] == 3
    assert out.read_text().startswith("c ")


def test_generate_bad_parameters(capsys):
    assert main(["generate", "cliquepart", "2", "4"]) == 2
    assert main(["generate", "bipartite", "3", "4"]) == 2


def test_certify_max(write, capsys):
    g, _, _ = gen_clique_partition_extremal(2, 3)
    assert main(["certify-ab", write(g), "--max"]) == 0
    assert "in A_4 (phi = 4)" in capsys.readouterr().out


def test_certify_non_member_and_non_cobipartite(write, capsys):
    g, _, _ = gen_clique_partition_extremal(2, 3)
    assert main(["certify-ab", write(g), "--b", "5"]) == 1
    assert main(["certify-ab", write(cycle_graph(5)), "--b", "3"]) == 2


def test_parse_error(tmp_path, capsys):
    path = tmp_path / "bad.col"
    path.write_text("p edge 3 1\ne 1 9\n")
    assert main(["phi", str(path)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_missing_file(capsys):
    assert main(["phi", "/nonexistent/graph.col"]) == 2


def test_bounds(write, capsys):
    assert main(["bounds", write(cycle_graph(5)), "--exact"]) == 0
    out = capsys.readouterr().out
    assert "clique_partition" in out and "exact phi" in out


def test_budget_exceeded_exits_1(write, capsys):
    from bchromatic.harness import random_graph
    assert main(["phi", write(random_graph(12, 0.5, 1)), "--budget", "1"]) == 1


def test_fuzz(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"family": "tree", "n_min": 3, "n_max": 10, "samples": 10, "seed": 1}))
    report = tmp_path / "out.json"
    assert main(["fuzz", "--config", str(cfg), "--json", str(report)]) == 0
    data = json.loads(report.read_text())
    assert data["counts"]["pass"] == 10 and data["meta"]["seed"] == 1


def test_bad_fuzz_config(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"family": "nope"}))
    assert main(["fuzz", "--config", str(cfg)]) == 2


def test_json_reports_are_byte_identical(write, tmp_path, capsys):
    g = write(cycle_graph(7))
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["phi", g, "--json", str(a)]) == 0
    assert main(["phi", g, "--json", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text())
    assert set(data) == {"graph", "results", "certificates", "meta"}
