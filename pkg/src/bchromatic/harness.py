"""Seeded random graph families and theorem-fuzzing campaigns."""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Any, Optional

from ._kernels import SearchBudgetExceeded
from .bounds import BoundsReport, bounds_report
from .graph import Graph, complement, is_k1t_free
from .invariants import m_bound

FAMILY_MAX_N = {
    "general": 10,
    "bipartite": 14,
    "cobipartite": 12,
    "k1t-free": 10,
    "tree": 16,
}


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi ``G(n, p)``; pairs are visited in lexicographic order."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_bipartite(n1: int, n2: int, p: float, seed: int) -> Graph:
    """Random bipartite graph with sides ``0..n1-1`` and ``n1..n1+n2-1``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [(u, n1 + v) for u in range(n1) for v in range(n2) if rng.random() < p]
    return Graph.from_edges(n1 + n2, edges)


def random_cobipartite(n1: int, n2: int, p: float, seed: int) -> Graph:
    return complement(random_bipartite(n1, n2, p, seed))


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree via a random Pruefer sequence."""
    if n <= 2:
        return Graph.from_edges(n, [(0, 1)] if n == 2 else [])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def random_k1t_free(n: int, p: float, t: int, seed: int, attempts: int = 200) -> Graph:
    """Rejection-sample ``G(n, p)`` until it is K_{1,t}-free.

    After ``attempts`` rejections the last sample is repaired by deleting,
    at each offending centre, the edge to the largest vertex of an
    independent ``t``-set in its neighbourhood.
    """
    rng = random.Random(seed)
    g = random_graph(n, p, rng.getrandbits(64))
    for _ in range(attempts):
        if is_k1t_free(g, t):
            return g
        g = random_graph(n, p, rng.getrandbits(64))
    rows = list(g.adj)
    while True:
        h = Graph(n, tuple(rows))
        hit = _find_star(h, t)
        if hit is None:
            return h
        centre, leaf = hit
        rows[centre] &= ~(1 << leaf)
        rows[leaf] &= ~(1 << centre)


def _find_star(g: Graph, t: int) -> Optional[tuple[int, int]]:
    for v in range(g.n):
        for leaves in combinations(g.neighbors(v), t):
            if all(not g.has_edge(a, b) for a, b in combinations(leaves, 2)):
                return v, max(leaves)
    return None


@dataclass
class FuzzConfig:
    family: str = "general"
    n_min: int = 4
    n_max: int = 8
    p: float = 0.5
    samples: int = 50
    seed: int = 0
    budget: Optional[int] = None
    t: int = 3

    def __post_init__(self) -> None:
        if self.family not in FAMILY_MAX_N:
            raise ValueError(f"unknown family {self.family!r}; choose from {sorted(FAMILY_MAX_N)}")
        cap = FAMILY_MAX_N[self.family]
        if not 1 <= self.n_min <= self.n_max <= cap:
            raise ValueError(f"n range must satisfy 1 <= n_min <= n_max <= {cap} for {self.family}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("edge probability must lie in [0, 1]")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    @classmethod
    def from_file(cls, path: str) -> "FuzzConfig":
        with open(path, encoding="utf-8") as fh:
            return cls(**json.load(fh))


def sample_family(family: str, n: int, p: float, seed: int, t: int = 3) -> Graph:
    if family == "general":
        return random_graph(n, p, seed)
    if family in ("bipartite", "cobipartite"):
        rng = random.Random(seed)
        n1 = rng.randint(0, n)
        sub = rng.getrandbits(64)
        return random_bipartite(n1, n - n1, p, sub) if family == "bipartite" else random_cobipartite(n1, n - n1, p, sub)
    if family == "k1t-free":
        return random_k1t_free(n, p, t, seed)
    if family == "tree":
        return random_tree(n, seed)
    raise ValueError(f"unknown family {family!r}")


def sample_stream(config: FuzzConfig) -> list[Graph]:
    rng = random.Random(config.seed)
    graphs = []
    for _ in range(config.samples):
        n = rng.randint(config.n_min, config.n_max)
        graphs.append(sample_family(config.family, n, config.p, rng.getrandbits(64), config.t))
    return graphs


def check_theorems(g: Graph, budget: Optional[int] = None, tree: bool = False) -> BoundsReport:
    """Bounds report with exact phi; a budget overrun yields status ``skipped``."""
    try:
        report = bounds_report(g, compute_exact=True, budget=budget)
    except SearchBudgetExceeded as exc:
        return BoundsReport(g.n, [], status="skipped", violations=[f"budget exceeded: {exc}"])
    if tree:
        m = m_bound(g)
        if not m - 1 <= report.exact_phi <= m:
            report.violations.append(f"tree property: phi={report.exact_phi} outside [m-1, m] = [{m - 1}, {m}]")
            report.status = "violation"
    return report


def _check_one(args: tuple[Graph, Optional[int], bool]) -> dict[str, Any]:
    g, budget, tree = args
    report = check_theorems(g, budget, tree)
    return {
        "graph": {"n": g.n, "edges": [list(e) for e in g.edges()]},
        "report": report.to_json(),
        "certificate": report.certificate.to_json() if report.certificate else None,
    }


def run_fuzz(config: FuzzConfig, workers: int = 1) -> dict[str, Any]:
    """Check every theorem on the sample stream; results keep sample order."""
    graphs = sample_stream(config)
    jobs = [(g, config.budget, config.family == "tree") for g in graphs]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_one, jobs))
    else:
        results = [_check_one(job) for job in jobs]
    for i, r in enumerate(results):
        r["index"] = i
    counts = {"pass": 0, "violation": 0, "skipped": 0}
    for r in results:
        counts[r["report"]["status"]] += 1
    return {"config": asdict(config), "counts": counts, "results": results}
