from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from bchromatic._kernels import BACKEND
from bchromatic.graph import Graph

settings.register_profile(
    "default",
    max_examples=120,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def bipartite_graphs(draw, max_n: int = 8) -> Graph:
    n1 = draw(st.integers(min_value=0, max_value=max_n))
    n2 = draw(st.integers(min_value=0, max_value=max_n - n1))
    pairs = [(u, n1 + v) for u in range(n1) for v in range(n2)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n1 + n2, [e for e, keep in zip(pairs, chosen) if keep])


requires_compiled = pytest.mark.skipif(BACKEND != "cython", reason="compiled kernels not built")
