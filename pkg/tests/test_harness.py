from __future__ import annotations

import json

import pytest

from bchromatic.graph import connected_components, is_bipartite, is_k1t_free
from bchromatic.harness import (
    FuzzConfig,
    check_theorems,
    random_bipartite,
    random_cobipartite,
    random_graph,
    random_k1t_free,
    random_tree,
    run_fuzz,
    sample_stream,
)
from bchromatic.graph import complement


def test_seeded_generation_is_deterministic():
    assert random_graph(12, 0.4, 7) == random_graph(12, 0.4, 7)
    assert random_graph(12, 0.4, 7) != random_graph(12, 0.4, 8)


def test_extreme_probabilities():
    assert random_graph(6, 0.0, 1).num_edges == 0
    assert random_graph(6, 1.0, 1).num_edges == 15
    assert random_bipartite(3, 4, 1.0, 1).num_edges == 12
    with pytest.raises(ValueError):
        random_graph(4, 1.5, 0)


def test_family_shapes():
    assert is_bipartite(random_bipartite(4, 5, 0.5, 3)) is not None
    assert is_bipartite(complement(random_cobipartite(4, 5, 0.5, 3))) is not None
    assert is_k1t_free(random_k1t_free(9, 0.5, 3, 11), 3)
    # dense samples rarely pass the rejection test; the repair path must still deliver
    assert is_k1t_free(random_k1t_free(10, 0.3, 3, 5, attempts=0), 3)


@pytest.mark.parametrize("n", [1, 2, 5, 12])
def test_random_tree(n):
    t = random_tree(n, n)
    assert t.num_edges == max(n - 1, 0)
    assert len(connected_components(t)) == 1


class TestConfig:
    def test_unknown_family(self):
        with pytest.raises(ValueError):
            FuzzConfig(family="planar")

    def test_size_cap(self):
        with pytest.raises(ValueError):
            FuzzConfig(family="general", n_max=40)
        with pytest.raises(ValueError):
            FuzzConfig(n_min=5, n_max=4)

    def test_seed_range(self):
        with pytest.raises(ValueError):
            FuzzConfig(seed=-1)

    def test_from_file(self, tmp_path):
        path = tmp_path / "c.json"
        path.write_text(json.dumps({"family": "tree", "n_min": 3, "n_max": 9, "samples": 4, "seed": 2}))
        cfg = FuzzConfig.from_file(str(path))
        assert cfg.family == "tree" and cfg.samples == 4


def test_stream_reproducible():
    cfg = FuzzConfig(family="bipartite", n_min=3, n_max=10, samples=20, seed=99)
    assert sample_stream(cfg) == sample_stream(cfg)


def test_budget_overrun_is_skipped():
    g = random_graph(10, 0.5, 3)
    report = check_theorems(g, budget=1)
    assert report.status == "skipped" and report.exact_phi is None


@pytest.mark.parametrize("family", ["general", "bipartite", "cobipartite", "k1t-free", "tree"])
def test_campaign_has_no_violations(family):
    cfg = FuzzConfig(family=family, n_min=2, n_max=8, samples=15, seed=42)
    summary = run_fuzz(cfg)
    assert summary["counts"]["violation"] == 0
    assert summary["counts"]["pass"] == 15
    assert [r["index"] for r in summary["results"]] == list(range(15))


def test_parallel_matches_serial():
    cfg = FuzzConfig(family="general", n_min=4, n_max=8, samples=12, seed=5)
    serial = json.dumps(run_fuzz(cfg, workers=1), sort_keys=True)
    parallel = json.dumps(run_fuzz(cfg, workers=3), sort_keys=True)
    assert serial == parallel
