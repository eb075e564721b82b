"""b-colouring semantics and the exact b-chromatic number."""

from __future__ import annotations

from typing import Optional

from . import _kernels
from .coloring import BColoringCertificate, Coloring
from .graph import Graph, iter_bits
from .invariants import chromatic_number, m_bound, resolve_budget


def _check_cover(g: Graph, c: Coloring) -> None:
    if c.n != g.n:
        raise ValueError(f"colouring covers {c.n} vertices, graph has {g.n}")


def is_proper(g: Graph, c: Coloring) -> bool:
    _check_cover(g, c)
    return all(c[u] != c[v] for u, v in g.edges())


def _neighbor_colors(g: Graph, c: Coloring, v: int) -> set[int]:
    return {c[u] for u in iter_bits(g.adj[v])}


def representatives(g: Graph, c: Coloring) -> dict[int, frozenset[int]]:
    """Per colour, the vertices whose neighbourhood shows every other colour."""
    if not is_proper(g, c):
        raise ValueError("colouring is not proper")
    b = c.b
    reps: dict[int, set[int]] = {color: set() for color in range(b)}
    for v in range(g.n):
        if len(_neighbor_colors(g, c, v)) == b - 1:
            reps[c[v]].add(v)
    return {color: frozenset(vs) for color, vs in reps.items()}


def is_b_coloring(g: Graph, c: Coloring, b: int) -> Optional[BColoringCertificate]:
    """Certificate (lowest-id representative per colour) or ``None``."""
    if c.n != g.n or c.b != b or not is_proper(g, c):
        return None
    reps = representatives(g, c)
    if any(not reps[color] for color in range(b)):
        return None
    return BColoringCertificate(c, tuple(min(reps[color]) for color in range(b)))


def validate_certificate(g: Graph, cert: BColoringCertificate) -> bool:
    """Check a certificate exactly as stated, including its chosen representatives."""
    c = cert.coloring
    if c.n != g.n or len(cert.reps) != c.b or not is_proper(g, c):
        return False
    for color, r in enumerate(cert.reps):
        if not 0 <= r < g.n or c[r] != color:
            return False
        if len(_neighbor_colors(g, c, r)) != c.b - 1:
            return False
    return True


def exists_b_coloring(
    g: Graph, k: int, budget: Optional[int] = None, backend: Optional[str] = None
) -> Optional[BColoringCertificate]:
    """Exact search for a b-colouring with exactly ``k`` colours.

    Raises ``SearchBudgetExceeded`` rather than answer when the node budget
    runs out.
    """
    if k < 1 or k > g.n:
        return None
    found = _kernels.b_coloring(list(g.adj), k, resolve_budget(budget), backend)
    if found is None:
        return None
    colors, reps = found
    cert = BColoringCertificate(Coloring(tuple(colors)), tuple(reps))
    if not validate_certificate(g, cert):
        raise RuntimeError("b-colouring kernel returned an invalid certificate")
    return cert


def b_chromatic_number(
    g: Graph, budget: Optional[int] = None, backend: Optional[str] = None
) -> tuple[int, BColoringCertificate]:
    """Exact b-chromatic number with a certificate.

    Feasible colour counts need not form an interval, so ``k`` is scanned
    downward from m(G); the first success is the maximum. At ``k = chi`` an
    optimal proper colouring is itself a b-colouring and is reused.
    """
    if g.n == 0:
        raise ValueError("b-chromatic number needs at least one vertex")
    chi, witness = chromatic_number(g, budget)
    for k in range(m_bound(g), chi, -1):
        cert = exists_b_coloring(g, k, budget, backend)
        if cert is not None:
            return k, cert
    cert = is_b_coloring(g, witness, chi)
    if cert is None:
        raise RuntimeError("optimal colouring failed to be a b-colouring")
    return chi, cert
