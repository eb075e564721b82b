"""Exact b-colourings: b-chromatic number, upper bounds, A_b certificates
and extremal constructions."""

__version__ = "0.1.0"

from ._kernels import BACKEND, SearchBudgetExceeded  # noqa: E402
from .coloring import BColoringCertificate, Coloring  # noqa: E402
from .graph import Bipartition, Graph, complement, induced_subgraph, is_bipartite, is_k1t_free, parse_dimacs  # noqa: E402
from .bcolor import b_chromatic_number, exists_b_coloring, is_b_coloring, is_proper, representatives  # noqa: E402
from .bounds import BoundsReport, bounds_report  # noqa: E402
from .ab_family import ABDecomposition, is_in_ab, phi_via_ab, verify_ab_decomposition  # noqa: E402
from .invariants import (  # noqa: E402
    biclique_cover_number,
    chromatic_number,
    clique_number,
    clique_partition_number,
    independence_number,
    m_bound,
)

__all__ = [
    "ABDecomposition",
    "BACKEND",
    "BColoringCertificate",
    "Bipartition",
    "BoundsReport",
    "Coloring",
    "Graph",
    "SearchBudgetExceeded",
    "b_chromatic_number",
    "biclique_cover_number",
    "bounds_report",
    "chromatic_number",
    "clique_number",
    "clique_partition_number",
    "complement",
    "exists_b_coloring",
    "independence_number",
    "induced_subgraph",
    "is_b_coloring",
    "is_bipartite",
    "is_in_ab",
    "is_k1t_free",
    "is_proper",
    "m_bound",
    "parse_dimacs",
    "phi_via_ab",
    "representatives",
    "verify_ab_decomposition",
]
