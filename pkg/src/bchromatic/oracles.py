"""Brute-force reference computations for small graphs.

Nothing here calls the search kernels or the solver modules; these are
the slow, obviously-correct counterparts used to check them.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Optional

from .graph import Graph


def set_partitions(n: int) -> Iterator[list[int]]:
    """All partitions of ``range(n)`` as restricted growth strings."""
    labels = [0] * n

    def rec(i: int, blocks: int) -> Iterator[list[int]]:
        if i == n:
            yield list(labels)
            return
        for c in range(blocks + 1):
            labels[i] = c
            yield from rec(i + 1, max(blocks, c + 1))

    if n == 0:
        yield []
        return
    yield from rec(0, 0)


def _edge_list(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if g.has_edge(u, v)]


def brute_is_b_coloring(g: Graph, labels: list[int]) -> bool:
    edges = _edge_list(g)
    if any(labels[u] == labels[v] for u, v in edges):
        return False
    b = max(labels) + 1 if labels else 0
    seen = [set() for _ in range(g.n)]
    for u, v in edges:
        seen[u].add(labels[v])
        seen[v].add(labels[u])
    dominated = {labels[v] for v in range(g.n) if len(seen[v]) == b - 1}
    return len(dominated) == b


def brute_b_chromatic_number(g: Graph) -> int:
    """Max colours over all partitions into independent sets that are b-colourings."""
    best = 0
    for labels in set_partitions(g.n):
        k = max(labels) + 1
        if k > best and brute_is_b_coloring(g, labels):
            best = k
    return best


def brute_b_spectrum(g: Graph) -> set[int]:
    return {max(lab) + 1 for lab in set_partitions(g.n) if brute_is_b_coloring(g, lab)}


def brute_chromatic_number(g: Graph) -> int:
    edges = _edge_list(g)
    return min(
        max(lab) + 1 for lab in set_partitions(g.n) if all(lab[u] != lab[v] for u, v in edges)
    ) if g.n else 0


def brute_clique_number(g: Graph) -> int:
    for size in range(g.n, 0, -1):
        for vs in combinations(range(g.n), size):
            if all(g.has_edge(a, b) for a, b in combinations(vs, 2)):
                return size
    return 0


def brute_biclique_number(g: Graph, side: list[int]) -> int:
    """Minimum disjoint biclique partition; ``side[v]`` is 0 or 1."""
    best: Optional[int] = None
    for labels in set_partitions(g.n):
        k = max(labels) + 1 if labels else 0
        if best is not None and k >= best:
            continue
        blocks = [[v for v in range(g.n) if labels[v] == c] for c in range(k)]
        if all(_is_biclique_block(g, blk, side) for blk in blocks):
            best = k
    return best or 0


def _is_biclique_block(g: Graph, block: list[int], side: list[int]) -> bool:
    if len(block) == 1:
        return True
    left = [v for v in block if side[v] == 0]
    right = [v for v in block if side[v] == 1]
    if not left or not right:
        return False
    return all(g.has_edge(u, v) for u in left for v in right)


def has_odd_cycle(g: Graph) -> bool:
    """Exhaustive search for an odd cycle through simple paths (tiny graphs only)."""
    def dfs(start: int, v: int, length: int, visited: set[int]) -> bool:
        for u in range(g.n):
            if not g.has_edge(v, u):
                continue
            if u == start and length >= 3 and length % 2 == 1:
                return True
            if u not in visited and u > start:
                visited.add(u)
                if dfs(start, u, length + 1, visited):
                    return True
                visited.discard(u)
        return False

    return any(dfs(s, s, 1, {s}) for s in range(g.n))


def brute_k1t_free(g: Graph, t: int) -> bool:
    for centre in range(g.n):
        nbrs = [u for u in range(g.n) if g.has_edge(centre, u)]
        for leaves in combinations(nbrs, t):
            if all(not g.has_edge(a, b) for a, b in combinations(leaves, 2)):
                return False
    return True
