"""The compiled and pure-Python kernels must explore identical search trees."""

from __future__ import annotations

import random

import pytest

from bchromatic import _kernels
from bchromatic._kernels import SearchBudgetExceeded
from bchromatic.bcolor import b_chromatic_number
from bchromatic.harness import random_graph

from conftest import requires_compiled


def sample(count, n_lo, n_hi, seed):
    rng = random.Random(seed)
    return [random_graph(rng.randint(n_lo, n_hi), rng.uniform(0.1, 0.9), rng.getrandbits(64)) for _ in range(count)]


@requires_compiled
@pytest.mark.parametrize("g", sample(40, 1, 16, 1), ids=lambda g: f"n{g.n}m{g.num_edges}")
def test_backends_agree(g):
    adj = list(g.adj)
    assert _kernels.max_clique(adj, "cython") == _kernels.max_clique(adj, "python")
    assert _kernels.greedy_coloring(adj, "cython") == _kernels.greedy_coloring(adj, "python")
    for k in range(1, min(g.n, 6) + 1):
        assert _kernels.color_k(adj, k, 10**6, "cython") == _kernels.color_k(adj, k, 10**6, "python")
        assert _kernels.b_coloring(adj, k, 10**6, "cython") == _kernels.b_coloring(adj, k, 10**6, "python")


@requires_compiled
def test_phi_witness_identical():
    for g in sample(15, 8, 18, 2):
        assert b_chromatic_number(g, backend="cython") == b_chromatic_number(g, backend="python")


@pytest.mark.parametrize("backend", ["python", pytest.param("cython", marks=requires_compiled)])
def test_budget_is_a_hard_error(backend):
    g = random_graph(16, 0.5, 9)
    with pytest.raises(SearchBudgetExceeded):
        _kernels.b_coloring(list(g.adj), 8, 3, backend)
    with pytest.raises(SearchBudgetExceeded):
        _kernels.color_k(list(g.adj), 3, 2, backend)


@requires_compiled
def test_large_graphs_fall_back():
    g = random_graph(70, 0.05, 4)
    adj = list(g.adj)
    assert _kernels.max_clique(adj, "cython") == _kernels.max_clique(adj, "python")


def test_backend_name():
    assert _kernels.BACKEND in ("cython", "python")
