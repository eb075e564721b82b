"""Membership of co-bipartite graphs in the family A_b.

A graph whose complement is bipartite with sides ``X`` and ``Y`` (so both
are cliques of ``G``) is in A_b when ``X = A1+B1+C1`` and ``Y = A2+B2+C2``
such that

* ``A1`` is complete to ``A2 | B2`` and ``A2`` is complete to ``C1``;
* ``B1``/``B2`` and ``C1``/``C2`` are joined by perfect anti-matchings
  (bijections along non-edges of ``G``);
* ``b = |X| + |A2|``.

Two routes decide membership: :func:`is_in_ab` reads a decomposition off a
b-colouring found by the exact solver, and :func:`find_ab_decomposition`
searches decompositions directly with bipartite matching and never touches
the colouring solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Any, Optional

from .bcolor import exists_b_coloring, is_b_coloring
from .coloring import BColoringCertificate, Coloring
from .graph import Bipartition, Graph, complement, connected_components, is_bipartite, mask_of
from .invariants import clique_number

_PARTS = ("X", "Y", "A1", "B1", "C1", "A2", "B2", "C2")


@dataclass(frozen=True)
class ABDecomposition:
    X: frozenset[int]
    Y: frozenset[int]
    A1: frozenset[int]
    B1: frozenset[int]
    C1: frozenset[int]
    A2: frozenset[int]
    B2: frozenset[int]
    C2: frozenset[int]
    M_B: tuple[tuple[int, int], ...]  # (B1 vertex, B2 vertex)
    M_C: tuple[tuple[int, int], ...]  # (C1 vertex, C2 vertex)
    b: int

    def __post_init__(self) -> None:
        for name in _PARTS:
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        object.__setattr__(self, "M_B", tuple(sorted((int(x), int(y)) for x, y in self.M_B)))
        object.__setattr__(self, "M_C", tuple(sorted((int(x), int(y)) for x, y in self.M_C)))

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {name: sorted(getattr(self, name)) for name in _PARTS}
        out["M_B"] = [list(p) for p in self.M_B]
        out["M_C"] = [list(p) for p in self.M_C]
        out["b"] = self.b
        return out

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "ABDecomposition":
        return cls(
            **{name: frozenset(data[name]) for name in _PARTS},
            M_B=tuple(tuple(p) for p in data["M_B"]),
            M_C=tuple(tuple(p) for p in data["M_C"]),
            b=int(data["b"]),
        )


def _is_clique(g: Graph, vs: frozenset[int]) -> bool:
    m = mask_of(vs)
    return all((g.adj[v] | 1 << v) & m == m for v in vs)


def _complete_between(g: Graph, s: frozenset[int], t: frozenset[int]) -> bool:
    m = mask_of(t)
    return all(g.adj[v] & m == m for v in s)


def _is_antimatching(g: Graph, pairs, left: frozenset[int], right: frozenset[int]) -> bool:
    lefts = [x for x, _ in pairs]
    rights = [y for _, y in pairs]
    if set(lefts) != left or set(rights) != right:
        return False
    if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
        return False
    return all(not g.has_edge(x, y) for x, y in pairs)


def verify_ab_decomposition(g: Graph, d: ABDecomposition) -> bool:
    """True iff ``d`` witnesses ``g`` in A_b.

    Raises ``ValueError`` when the parts do not partition the vertex set.
    """
    everything = frozenset(range(g.n))
    for name in _PARTS:
        if not getattr(d, name) <= everything:
            raise ValueError(f"{name} contains vertices outside the graph")
    if d.X & d.Y or d.X | d.Y != everything:
        raise ValueError("X and Y must partition the vertex set")
    for side, parts in (("X", ("A1", "B1", "C1")), ("Y", ("A2", "B2", "C2"))):
        sets = [getattr(d, p) for p in parts]
        if sum(len(s) for s in sets) != len(getattr(d, side)) or frozenset().union(*sets) != getattr(d, side):
            raise ValueError(f"{'/'.join(parts)} must partition {side}")
    if not (_is_clique(g, d.X) and _is_clique(g, d.Y)):
        return False
    if not (_complete_between(g, d.A1, d.A2 | d.B2) and _complete_between(g, d.A2, d.C1)):
        return False
    if not _is_antimatching(g, d.M_B, d.B1, d.B2):
        return False
    if not _is_antimatching(g, d.M_C, d.C1, d.C2):
        return False
    return d.b == len(d.X) + len(d.A2)


def canonical_coloring(d: ABDecomposition) -> Coloring:
    """Rainbow on ``X | A2``; ``B2`` and ``C2`` copy their anti-matched partners."""
    colors: dict[int, int] = {}
    for v in sorted(d.X | d.A2):
        colors[v] = len(colors)
    for x, y in d.M_B + d.M_C:
        colors[y] = colors[x]
    return Coloring.normalized([colors[v] for v in range(len(colors))])


def _require_cobipartite(g: Graph) -> Bipartition:
    bp = is_bipartite(complement(g))
    if bp is None:
        raise ValueError("graph is not the complement of a bipartite graph")
    return bp


def extract_ab_decomposition(g: Graph, cert: BColoringCertificate, bp: Bipartition) -> ABDecomposition:
    """Read an A_b decomposition off a b-colouring of a co-bipartite graph.

    Singleton classes form ``A1``/``A2``. Each two-vertex class meets both
    sides; if its representative lies in ``Y`` the pair goes to ``B1``/``B2``
    (representative in ``B2``), otherwise to ``C1``/``C2`` (representative
    in ``C1``).
    """
    parts: dict[str, set[int]] = {name: set() for name in _PARTS[2:]}
    m_b, m_c = [], []
    for color, cls in enumerate(cert.coloring.classes()):
        if len(cls) == 1:
            (v,) = cls
            parts["A1" if v in bp.X else "A2"].add(v)
            continue
        if len(cls) != 2:
            raise RuntimeError(f"colour class {cls} is larger than the independence number allows")
        x, y = (cls[0], cls[1]) if cls[0] in bp.X else (cls[1], cls[0])
        if x not in bp.X or y not in bp.Y:
            raise RuntimeError(f"colour class {cls} lies inside one clique")
        if cert.reps[color] == y:
            parts["B1"].add(x)
            parts["B2"].add(y)
            m_b.append((x, y))
        else:
            parts["C1"].add(x)
            parts["C2"].add(y)
            m_c.append((x, y))
    return ABDecomposition(
        X=bp.X, Y=bp.Y, **{k: frozenset(v) for k, v in parts.items()},
        M_B=tuple(m_b), M_C=tuple(m_c), b=len(bp.X) + len(parts["A2"]),
    )


def is_in_ab(g: Graph, b: int, budget: Optional[int] = None) -> Optional[ABDecomposition]:
    bp = _require_cobipartite(g)
    cert = exists_b_coloring(g, b, budget)
    if cert is None:
        return None
    d = extract_ab_decomposition(g, cert, bp)
    if not verify_ab_decomposition(g, d) or d.b != b:
        raise RuntimeError("extracted A_b decomposition failed verification")
    return d


def max_ab_decomposition(g: Graph, budget: Optional[int] = None) -> tuple[int, ABDecomposition]:
    _require_cobipartite(g)
    top = min(g.n, 4 * clique_number(g) // 3)
    for k in range(top, 0, -1):
        d = is_in_ab(g, k, budget)
        if d is not None:
            return k, d
    raise RuntimeError("no A_b decomposition found for any b")


def phi_via_ab(g: Graph, budget: Optional[int] = None) -> int:
    return max_ab_decomposition(g, budget)[0]


def ab_certificate(g: Graph, d: ABDecomposition) -> Optional[BColoringCertificate]:
    """b-colouring certificate built from a decomposition, or ``None`` if it fails."""
    return is_b_coloring(g, canonical_coloring(d), d.b)


# --- direct search ------------------------------------------------------------

def _perfect_matching(left: list[int], options: dict[int, list[int]]) -> Optional[dict[int, int]]:
    """Kuhn augmenting paths; returns ``left -> right`` covering all of ``left``."""
    owner: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for w in options[u]:
            if w in seen:
                continue
            seen.add(w)
            if w not in owner or augment(owner[w], seen):
                owner[w] = u
                return True
        return False

    for u in left:
        if not augment(u, set()):
            return None
    return {u: w for w, u in owner.items()}


def complement_bipartitions(g: Graph):
    """Every bipartition ``(X, Y)`` of the complement, up to swapping twins.

    Vertices isolated in the complement are universal in ``g`` and mutually
    interchangeable, so only how many of them sit in ``X`` matters.
    """
    h = complement(g)
    comps = connected_components(h)
    isolated = [c[0] for c in comps if len(c) == 1]
    oriented = []
    for comp in comps:
        if len(comp) == 1:
            continue
        sub = is_bipartite(Graph(h.n, tuple(row if v in comp else 0 for v, row in enumerate(h.adj))))
        if sub is None:
            raise ValueError("graph is not the complement of a bipartite graph")
        side = frozenset(comp) & sub.X
        oriented.append((side, frozenset(comp) - side))
    for flips in product((False, True), repeat=len(oriented)):
        X: set[int] = set()
        for (s, t), flip in zip(oriented, flips):
            X |= t if flip else s
        for cut in range(len(isolated) + 1):
            xs = frozenset(X | set(isolated[:cut]))
            yield Bipartition(xs, frozenset(range(g.n)) - xs)


def find_ab_decomposition(g: Graph, b: int) -> Optional[ABDecomposition]:
    """Search A_b decompositions directly (no colouring solver involved).

    For fixed ``A2`` and ``A1`` every remaining ``Y`` vertex must be
    anti-matched into ``X - A1``; the pair may join ``B`` when the ``Y``
    vertex is complete to ``A1`` and ``C`` when the ``X`` vertex is complete
    to ``A2``. So a decomposition exists iff that bipartite graph has a
    perfect matching.
    """
    _require_cobipartite(g)
    for bp in complement_bipartitions(g):
        xs, ys = sorted(bp.X), sorted(bp.Y)
        a2_size = b - len(xs)
        a1_size = len(xs) - len(ys) + a2_size
        if not (0 <= a2_size <= len(ys) and 0 <= a1_size <= len(xs)):
            continue
        for a2 in combinations(ys, a2_size):
            a2m = mask_of(a2)
            eligible = [x for x in xs if g.adj[x] & a2m == a2m]
            for a1 in combinations(eligible, a1_size):
                a1m = mask_of(a1)
                rest_x = [x for x in xs if not a1m >> x & 1]
                rest_y = [y for y in ys if not a2m >> y & 1]
                options = {}
                for y in rest_y:
                    y_to_a1 = g.adj[y] & a1m == a1m
                    options[y] = [
                        x for x in rest_x
                        if not g.has_edge(x, y) and (y_to_a1 or g.adj[x] & a2m == a2m)
                    ]
                match = _perfect_matching(rest_y, options)
                if match is None:
                    continue
                parts: dict[str, set[int]] = {"B1": set(), "B2": set(), "C1": set(), "C2": set()}
                m_b, m_c = [], []
                for y, x in match.items():
                    if g.adj[y] & a1m == a1m:
                        parts["B1"].add(x)
                        parts["B2"].add(y)
                        m_b.append((x, y))
                    else:
                        parts["C1"].add(x)
                        parts["C2"].add(y)
                        m_c.append((x, y))
                return ABDecomposition(
                    X=bp.X, Y=bp.Y, A1=frozenset(a1), A2=frozenset(a2),
                    **{k: frozenset(v) for k, v in parts.items()},
                    M_B=tuple(m_b), M_C=tuple(m_c), b=b,
                )
    return None
