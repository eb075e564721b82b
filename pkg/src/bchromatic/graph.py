"""Immutable simple graphs over dense integer vertex ids.

Adjacency is stored as one Python ``int`` bitmask per vertex, which keeps
the exact search kernels cheap and makes the whole structure hashable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, TextIO, Union


class DimacsParseError(ValueError):
    """Malformed DIMACS ``.col`` input; carries the offending line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Sorted ``(u, v)`` pairs with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return the subgraph induced by ``vertices`` and the new-id -> old-id map.

    Vertices are relabelled in increasing order of their original ids.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        rows.append(mask_of(index[u] for u in iter_bits(g.adj[v]) if u in index))
    return Graph(len(keep), tuple(rows)), keep


@dataclass(frozen=True)
class Bipartition:
    X: frozenset[int]
    Y: frozenset[int]

    def is_valid_for(self, g: Graph) -> bool:
        if self.X & self.Y or (self.X | self.Y) != frozenset(range(g.n)):
            return False
        xm, ym = mask_of(self.X), mask_of(self.Y)
        return all(not g.adj[v] & xm for v in self.X) and all(not g.adj[v] & ym for v in self.Y)

    def side_mask(self) -> int:
        return mask_of(self.X)


def is_bipartite(g: Graph) -> Optional[Bipartition]:
    """Two-colour ``g`` by BFS layering; components are rooted at their lowest id.

    Roots (and hence isolated vertices) land in ``X``.
    """
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in iter_bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    return Bipartition(
        frozenset(v for v in range(g.n) if side[v] == 0),
        frozenset(v for v in range(g.n) if side[v] == 1),
    )


def connected_components(g: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for root in range(g.n):
        if seen >> root & 1:
            continue
        comp = frontier = 1 << root
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(list(iter_bits(comp)))
    return comps


def _has_independent_subset(g: Graph, mask: int, size: int) -> bool:
    # Depth-first search over ascending vertex ids; desk-scale neighbourhoods only.
    if size <= 0:
        return True
    if mask.bit_count() < size:
        return False
    v = (mask & -mask).bit_length() - 1
    rest = mask & ~(1 << v)
    return _has_independent_subset(g, rest & ~g.adj[v], size - 1) or _has_independent_subset(g, rest, size)


def is_k1t_free(g: Graph, t: int) -> bool:
    """True iff no vertex has ``t`` pairwise non-adjacent neighbours."""
    if t < 2:
        raise ValueError("t must be at least 2")
    return not any(_has_independent_subset(g, g.adj[v], t) for v in range(g.n))


# --- named graphs -----------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# --- DIMACS -----------------------------------------------------------------

def parse_dimacs(text: Union[str, TextIO]) -> Graph:
    """Parse DIMACS ``.col`` text (``p edge n m`` header, 1-based ``e u v`` lines)."""
    lines = text.splitlines() if isinstance(text, str) else text
    n: Optional[int] = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(lines, start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise DimacsParseError(lineno, "duplicate problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise DimacsParseError(lineno, f"malformed header {raw.strip()!r}")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsParseError(lineno, f"non-integer header field in {raw.strip()!r}") from None
            if n < 0 or m < 0:
                raise DimacsParseError(lineno, "negative size in header")
        elif tag == "e":
            if n is None:
                raise DimacsParseError(lineno, "edge line before 'p edge' header")
            if len(parts) != 3:
                raise DimacsParseError(lineno, f"malformed edge {raw.strip()!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise DimacsParseError(lineno, f"non-integer vertex in {raw.strip()!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsParseError(lineno, f"edge ({u}, {v}) out of range 1..{n}")
            if u == v:
                raise DimacsParseError(lineno, f"self-loop at vertex {u}")
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise DimacsParseError(lineno, f"unknown line type {tag!r}")
    if n is None:
        raise DimacsParseError(0, "missing 'p edge n m' header")
    return Graph.from_edges(n, edges)


def read_dimacs(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_dimacs(fh.read())


def to_dimacs(g: Graph, comment: str = "generated by bchromatic") -> str:
    out = [f"c {line}" for line in comment.splitlines()] or ["c"]
    edges = g.edges()
    out.append(f"p edge {g.n} {len(edges)}")
    out.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(out) + "\n"
