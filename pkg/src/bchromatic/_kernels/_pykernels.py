"""Pure-Python search kernels.

Every routine here has a line-for-line twin in ``_ckernels.pyx``; both must
visit the search tree in the same order so that witnesses agree exactly.
Adjacency arrives as a list of int bitmasks.
"""

from __future__ import annotations

from typing import Optional

BUDGET_EXCEEDED = -2


class _Budget(Exception):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def max_clique(adj: list[int]) -> int:
    """Bitmask of a maximum clique (greedy-colouring bound branch and bound)."""
    n = len(adj)
    if n == 0:
        return 0
    best = [0, 0]  # size, mask

    def color_sort(cand: int) -> tuple[list[int], list[int]]:
        order, bounds = [], []
        color = 0
        rest = cand
        while rest:
            color += 1
            q = rest
            while q:
                v = (q & -q).bit_length() - 1
                q &= ~adj[v] & ~(1 << v)
                rest &= ~(1 << v)
                order.append(v)
                bounds.append(color)
        return order, bounds

    def expand(clique: int, size: int, cand: int) -> None:
        order, bounds = color_sort(cand)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best[0]:
                return
            v = order[i]
            sub = cand & adj[v]
            if sub:
                expand(clique | 1 << v, size + 1, sub)
            elif size + 1 > best[0]:
                best[0] = size + 1
                best[1] = clique | 1 << v
            cand &= ~(1 << v)

    expand(0, 0, (1 << n) - 1)
    return best[1]


def _dsatur_pick(adj: list[int], colors: list[int], deg: list[int]) -> tuple[int, int]:
    best, bsat, bdeg, bforb = -1, -1, -1, 0
    for v in range(len(adj)):
        if colors[v] >= 0:
            continue
        forb = 0
        for u in _bits(adj[v]):
            if colors[u] >= 0:
                forb |= 1 << colors[u]
        sat = forb.bit_count()
        if sat > bsat or (sat == bsat and deg[v] > bdeg):
            best, bsat, bdeg, bforb = v, sat, deg[v], forb
    return best, bforb


def greedy_coloring(adj: list[int]) -> list[int]:
    """DSATUR greedy colouring, smallest admissible colour first."""
    n = len(adj)
    deg = [a.bit_count() for a in adj]
    colors = [-1] * n
    for _ in range(n):
        v, forb = _dsatur_pick(adj, colors, deg)
        c = 0
        while forb >> c & 1:
            c += 1
        colors[v] = c
    return colors


def color_k(adj: list[int], k: int, budget: int) -> Optional[list[int]]:
    """Exact ``k``-colouring by DSATUR backtracking, or ``None``.

    Raises ``_Budget`` once more than ``budget`` colour assignments were tried.
    """
    n = len(adj)
    deg = [a.bit_count() for a in adj]
    colors = [-1] * n
    nodes = 0

    def rec(done: int, used: int) -> bool:
        nonlocal nodes
        if done == n:
            return True
        v, forb = _dsatur_pick(adj, colors, deg)
        limit = min(used + 1, k)
        for c in range(limit):
            if forb >> c & 1:
                continue
            nodes += 1
            if nodes > budget:
                raise _Budget
            colors[v] = c
            if rec(done + 1, used if c < used else c + 1):
                return True
        colors[v] = -1
        return False

    return colors if rec(0, 0) else None


def b_coloring(adj: list[int], k: int, budget: int) -> Optional[tuple[list[int], list[int]]]:
    """Search a b-colouring with exactly ``k`` colours.

    Representatives are fixed first as an increasing vertex sequence, the
    i-th one receiving colour i; the rest of the graph is then coloured
    under the requirement that every representative sees all other colours.
    Returns ``(colors, reps)`` or ``None``; raises ``_Budget`` when the node
    count exceeds ``budget``.
    """
    n = len(adj)
    if k < 1 or k > n:
        return None
    cand = [v for v in range(n) if adj[v].bit_count() >= k - 1]
    if len(cand) < k:
        return None
    full = (1 << k) - 1
    colors = [-1] * n
    reps = [0] * k
    nodes = 0

    def tick() -> None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _Budget

    def extend() -> bool:
        nc = [0] * n
        uncolored = 0
        for u in range(n):
            c = colors[u]
            if c < 0:
                uncolored |= 1 << u
                continue
            for w in _bits(adj[u]):
                nc[w] |= 1 << c
        # every representative must still be able to see all other colours
        need = [0] * n
        for i in range(k):
            r = reps[i]
            missing = full & ~(1 << i) & ~nc[r]
            if not missing:
                continue
            pool = adj[r] & uncolored
            if pool.bit_count() < missing.bit_count():
                return False
            avail = 0
            for u in _bits(pool):
                avail |= full & ~nc[u]
                need[u] |= missing
            if missing & ~avail:
                return False
        if not uncolored:
            return True
        v, vdom = -1, 0
        bsize = k + 1
        for u in _bits(uncolored):
            dom = full & ~nc[u]
            size = dom.bit_count()
            if size < bsize:
                v, vdom, bsize = u, dom, size
                if size == 0:
                    return False
        pref = vdom & need[v]
        for group in (pref, vdom & ~pref):
            for c in _bits(group):
                tick()
                colors[v] = c
                if extend():
                    return True
        colors[v] = -1
        return False

    def choose(i: int, start: int) -> bool:
        if i == k:
            return extend()
        for idx in range(start, len(cand) - (k - i) + 1):
            v = cand[idx]
            tick()
            reps[i] = v
            colors[v] = i
            if choose(i + 1, idx + 1):
                return True
            colors[v] = -1
        return False

    if choose(0, 0):
        return colors, reps
    return None
