"""Exact classical invariants: chromatic, clique, independence, clique
partition and biclique cover numbers, plus the degree bound m(G)."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import _kernels
from .coloring import Coloring
from .graph import Bipartition, Graph, complement, iter_bits

DEFAULT_BUDGET = int(os.environ.get("BCHROMATIC_BUDGET", "20000000"))


def resolve_budget(budget: Optional[int]) -> int:
    return DEFAULT_BUDGET if budget is None else int(budget)


def max_clique(g: Graph) -> list[int]:
    """Vertices of one maximum clique (deterministic)."""
    return list(iter_bits(_kernels.max_clique(list(g.adj))))


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


def independence_number(g: Graph) -> int:
    return clique_number(complement(g))


def chromatic_number(g: Graph, budget: Optional[int] = None) -> tuple[int, Coloring]:
    """Exact chromatic number with an optimal colouring as witness.

    Scans ``k`` upward from the clique number until the DSATUR greedy
    colouring is reached. Raises ``SearchBudgetExceeded`` per ``k`` step.
    """
    if g.n == 0:
        return 0, Coloring(())
    adj = list(g.adj)
    greedy = Coloring.normalized(_kernels.greedy_coloring(adj))
    lo = clique_number(g)
    for k in range(lo, greedy.b):
        found = _kernels.color_k(adj, k, resolve_budget(budget))
        if found is not None:
            return k, Coloring.normalized(found)
    return greedy.b, greedy


def clique_partition_number(g: Graph, budget: Optional[int] = None) -> int:
    return chromatic_number(complement(g), budget)[0]


def m_bound(g: Graph) -> int:
    """Largest ``i`` with ``d(x_i) >= i - 1`` for degrees sorted non-increasing."""
    degs = sorted(g.degrees(), reverse=True)
    m = 0
    for i, d in enumerate(degs, start=1):
        if d >= i - 1:
            m = i
    return m


@dataclass(frozen=True)
class BicliqueCover:
    """Vertex-disjoint complete bipartite blocks covering every vertex.

    In each block ``S1`` holds the side of its lowest vertex; a block with
    empty ``S2`` is a single vertex.
    """

    blocks: tuple[tuple[frozenset[int], frozenset[int]], ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def is_valid_for(self, g: Graph, bp: Bipartition) -> bool:
        seen: set[int] = set()
        for s1, s2 in self.blocks:
            block = s1 | s2
            if not s1 or block & seen or s1 & s2:
                return False
            seen |= block
            if not s2:
                if len(s1) != 1:
                    return False
                continue
            if not (s1 <= bp.X and s2 <= bp.Y) and not (s1 <= bp.Y and s2 <= bp.X):
                return False
            if any(not g.has_edge(u, v) for u in s1 for v in s2):
                return False
        return seen == set(range(g.n))

    def to_json(self) -> list[list[list[int]]]:
        return [[sorted(s1), sorted(s2)] for s1, s2 in self.blocks]


def biclique_cover_number(g: Graph, bp: Bipartition) -> tuple[int, BicliqueCover]:
    """Minimum number of disjoint bicliques (single vertices allowed) covering ``g``.

    Exhaustive search over the block containing the lowest uncovered vertex,
    memoised on the uncovered set. Intended for graphs up to ~14 vertices.
    """
    if not bp.is_valid_for(g):
        raise ValueError("invalid bipartition for this graph")
    adj = g.adj
    xmask = bp.side_mask()
    ymask = g.vertex_mask & ~xmask

    def lower_bound(unc: int) -> int:
        isolated = sum(1 for v in iter_bits(unc) if not adj[v] & unc)
        return isolated + (1 if unc.bit_count() > isolated else 0)

    @lru_cache(maxsize=None)
    def solve(unc: int) -> tuple[int, tuple[int, ...]]:
        if not unc:
            return 0, ()
        v = (unc & -unc).bit_length() - 1
        vbit = 1 << v
        same = xmask if vbit & xmask else ymask
        sub_count, sub_blocks = solve(unc & ~vbit)
        best, best_blocks = 1 + sub_count, (vbit,) + sub_blocks
        floor = lower_bound(unc)
        nbrs = adj[v] & unc
        s2 = nbrs
        while s2 and best > floor:
            common = unc & same & ~vbit
            for w in iter_bits(s2):
                common &= adj[w]
            t = common
            while True:
                block = vbit | t | s2
                cnt, blocks = solve(unc & ~block)
                if 1 + cnt < best:
                    best, best_blocks = 1 + cnt, (block,) + blocks
                    if best <= floor:
                        break
                if not t:
                    break
                t = (t - 1) & common
            s2 = (s2 - 1) & nbrs
        return best, best_blocks

    count, masks = solve(g.vertex_mask)
    solve.cache_clear()
    blocks = []
    for block in masks:
        low = (block & -block).bit_length() - 1
        same = xmask if (1 << low) & xmask else ymask
        blocks.append((frozenset(iter_bits(block & same)), frozenset(iter_bits(block & ~same))))
    return count, BicliqueCover(tuple(blocks))


__all__ = [
    "BicliqueCover",
    "biclique_cover_number",
    "chromatic_number",
    "clique_number",
    "clique_partition_number",
    "independence_number",
    "m_bound",
    "max_clique",
    "resolve_budget",
]
