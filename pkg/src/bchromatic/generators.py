"""Extremal constructions with b-colouring certificates.

Each generator returns ``(graph, certificate, claimed_phi)``. The
certificate proves ``phi >= claimed_phi``; the matching upper bound comes
from the corresponding theorem in :mod:`bchromatic.bounds`.
"""

from __future__ import annotations

from .bcolor import validate_certificate
from .coloring import BColoringCertificate, Coloring
from .graph import Graph


class ConstructionError(RuntimeError):
    """A generated certificate failed validation."""


def _finish(g: Graph, colors: list[int], reps: list[int], claimed: int) -> tuple[Graph, BColoringCertificate, int]:
    cert = BColoringCertificate(Coloring(tuple(colors)), tuple(reps))
    if cert.b != claimed or not validate_certificate(g, cert):
        raise ConstructionError(f"generated certificate does not certify {claimed} colours")
    return g, cert, claimed


def gen_k1t_extremal(t: int, k: int) -> tuple[Graph, BColoringCertificate, int]:
    """Chain of ``(t-1)(k-1)+1`` copies of a centre joined to ``t-1`` disjoint (k-1)-cliques.

    Copy ``i`` occupies ids ``i*s .. i*s+s-1`` with ``s = 1+(t-1)(k-1)``;
    its centre comes first, followed by the cliques in order. Consecutive
    copies are linked from the first vertex of clique 0 in copy ``i`` to
    the first vertex of clique 1 in copy ``i+1``.
    """
    if t < 3 or k < 2:
        raise ValueError("need t >= 3 and k >= 2")
    q = k - 1
    phi = (t - 1) * q + 1
    size = phi  # one centre plus (t-1)(k-1) clique vertices
    copies = phi
    edges = []
    for i in range(copies):
        base = i * size
        for j in range(t - 1):
            clique = [base + 1 + j * q + a for a in range(q)]
            edges.extend((base, v) for v in clique)
            edges.extend((u, v) for a, u in enumerate(clique) for v in clique[a + 1:])
        if i + 1 < copies:
            edges.append((base + 1, base + size + 1 + q))
    g = Graph.from_edges(copies * size, edges)

    # centre of copy i takes colour i; its other vertices take the remaining
    # colours shifted cyclically by i
    colors = [0] * g.n
    for i in range(copies):
        base = i * size
        colors[base] = i
        for j in range(size - 1):
            colors[base + 1 + j] = (i + 1 + j) % phi
    for u, v in g.edges():
        if colors[u] == colors[v]:
            _repair_chain_conflict(g, colors, u, v, size)
    return _finish(g, colors, [i * size for i in range(copies)], phi)


def _repair_chain_conflict(g: Graph, colors: list[int], u: int, v: int, size: int) -> None:
    # swap v's colour with another non-centre vertex of its own copy that
    # creates no new conflict; centres keep their colours so stay representatives
    base = v - v % size
    for w in range(base + 1, base + size):
        if w == v:
            continue
        colors[v], colors[w] = colors[w], colors[v]
        if all(colors[x] != colors[y] for x in (v, w) for y in g.neighbors(x)):
            return
        colors[v], colors[w] = colors[w], colors[v]
    raise ConstructionError(f"could not repair colour conflict on chain edge {u}-{v}")


def gen_clique_partition_extremal(k: int, w: int) -> tuple[Graph, BColoringCertificate, int]:
    """Cliques ``A_i, B_i, C_i`` (i < k) meeting the clique-partition bound with equality.

    ``|A_i| = w/(2k-1)`` and ``|B_i| = |C_i| = (k-1)w/(2k-1)``. Vertex ids:
    all ``A_i`` first, then all ``B_i``, then all ``C_i``.
    """
    if k < 2 or w < 1:
        raise ValueError("need k >= 2 and w >= 1")
    if w % (2 * k - 1):
        raise ValueError(f"clique number {w} must be divisible by 2k-1 = {2 * k - 1}")
    sa = w // (2 * k - 1)
    sb = (k - 1) * sa
    A = [[i * sa + a for a in range(sa)] for i in range(k)]
    off_b = k * sa
    B = [[off_b + i * sb + a for a in range(sb)] for i in range(k)]
    off_c = off_b + k * sb
    C = [[off_c + i * sb + a for a in range(sb)] for i in range(k)]
    n = off_c + k * sb

    edges = set()

    def join(xs, ys):
        edges.update((min(x, y), max(x, y)) for x in xs for y in ys if x != y)

    all_a = [v for part in A for v in part]
    join(all_a, all_a)
    for i in range(k):
        join(B[i], B[i])
        join(C[i], C[i])
        join(A[i], C[i])
        for j in range(k):
            join(A[i], B[j])
            if i != j:
                join(B[i], C[j])
    g = Graph.from_edges(n, edges)

    colors = [0] * n
    for c, v in enumerate(all_a + [v for part in B for v in part]):
        colors[v] = c
    for i in range(k):
        for b_v, c_v in zip(B[i], C[i]):
            colors[c_v] = colors[b_v]
    phi = k * k * w // (2 * k - 1)
    reps = all_a + [v for part in B for v in part]
    return _finish(g, colors, reps, phi)


def gen_bipartite_extremal(p: int) -> tuple[Graph, BColoringCertificate, int]:
    """``K_{p-1,p-1}`` minus a ``(p-2)``-matching plus ``p-2`` pendant vertices.

    Ids: ``X = x_1, x_3..x_p`` (0..p-2), ``Y = y_2, y_3..y_p`` (p-1..2p-3),
    extras ``e_3..e_p`` (2p-2..3p-5); ``x_c``/``y_c`` carry colour label
    ``c`` and the extras label 2. Colour indices are ``label - 1``.
    """
    if p < 3:
        raise ValueError("need p >= 3")
    x_labels = [1] + list(range(3, p + 1))
    y_labels = list(range(2, p + 1))
    xs = list(range(p - 1))
    ys = list(range(p - 1, 2 * p - 2))
    extras = list(range(2 * p - 2, 3 * p - 4))
    edges = [
        (x, y)
        for x, lx in zip(xs, x_labels)
        for y, ly in zip(ys, y_labels)
        if lx != ly
    ]
    # extras e_c attach to y_c for c = 3..p
    edges.extend(zip(extras, ys[1:]))
    g = Graph.from_edges(3 * p - 4, edges)
    colors = [lab - 1 for lab in x_labels] + [lab - 1 for lab in y_labels] + [1] * (p - 2)
    # representatives: x_1 for colour 1, y_c for every other colour
    reps = [xs[0]] + ys
    return _finish(g, colors, reps, p)
