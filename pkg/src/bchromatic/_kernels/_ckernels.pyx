# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels (graphs with at most 64 vertices).

Mirrors ``_pykernels`` node for node; see that module for the contracts.
"""

from libc.stdint cimport uint64_t, int64_t

cdef enum:
    MAXN = 64

BUDGET_EXCEEDED = -2


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int lowbit(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef inline uint64_t bit(int v) nogil:
    return (<uint64_t>1) << v


cdef inline uint64_t low_mask(int k) nogil:
    if k >= 64:
        return ~(<uint64_t>0)
    return bit(k) - 1


cdef int load_adj(list adj, uint64_t* out) except -1:
    cdef int n = len(adj)
    if n > MAXN:
        raise ValueError("compiled kernels support at most 64 vertices")
    for i in range(n):
        out[i] = <uint64_t>adj[i]
    return n


# --- maximum clique ---------------------------------------------------------

cdef struct CliqueCtx:
    int n
    uint64_t adj[MAXN]
    int best
    uint64_t best_mask


cdef void clique_expand(CliqueCtx* ctx, uint64_t clique, int size, uint64_t cand) nogil:
    cdef int order[MAXN]
    cdef int bounds[MAXN]
    cdef int cnt = 0
    cdef int color = 0
    cdef uint64_t rest = cand
    cdef uint64_t q, sub
    cdef int v, i
    while rest:
        color += 1
        q = rest
        while q:
            v = lowbit(q)
            q &= ~ctx.adj[v] & ~bit(v)
            rest &= ~bit(v)
            order[cnt] = v
            bounds[cnt] = color
            cnt += 1
    i = cnt - 1
    while i >= 0:
        if size + bounds[i] <= ctx.best:
            return
        v = order[i]
        sub = cand & ctx.adj[v]
        if sub:
            clique_expand(ctx, clique | bit(v), size + 1, sub)
        elif size + 1 > ctx.best:
            ctx.best = size + 1
            ctx.best_mask = clique | bit(v)
        cand &= ~bit(v)
        i -= 1


def max_clique(list adj):
    cdef CliqueCtx ctx
    ctx.n = load_adj(adj, ctx.adj)
    ctx.best = 0
    ctx.best_mask = 0
    if ctx.n == 0:
        return 0
    with nogil:
        clique_expand(&ctx, 0, 0, low_mask(ctx.n))
    return int(ctx.best_mask)


# --- exact k-colouring ------------------------------------------------------

cdef struct ColorCtx:
    int n
    int k
    uint64_t adj[MAXN]
    int deg[MAXN]
    int colors[MAXN]
    int64_t nodes
    int64_t budget
    bint over


cdef int dsatur_pick(ColorCtx* ctx, uint64_t* forb_out) nogil:
    cdef int best = -1, bsat = -1, bdeg = -1
    cdef uint64_t bforb = 0, forb, a
    cdef int v, u, sat
    for v in range(ctx.n):
        if ctx.colors[v] >= 0:
            continue
        forb = 0
        a = ctx.adj[v]
        while a:
            u = lowbit(a)
            a &= a - 1
            if ctx.colors[u] >= 0:
                forb |= bit(ctx.colors[u])
        sat = popcount(forb)
        if sat > bsat or (sat == bsat and ctx.deg[v] > bdeg):
            best = v
            bsat = sat
            bdeg = ctx.deg[v]
            bforb = forb
    forb_out[0] = bforb
    return best


cdef bint color_rec(ColorCtx* ctx, int done, int used) nogil:
    cdef uint64_t forb
    cdef int v, c, limit
    if done == ctx.n:
        return True
    v = dsatur_pick(ctx, &forb)
    limit = used + 1 if used + 1 < ctx.k else ctx.k
    for c in range(limit):
        if (forb >> c) & 1:
            continue
        ctx.nodes += 1
        if ctx.nodes > ctx.budget:
            ctx.over = True
            return False
        ctx.colors[v] = c
        if color_rec(ctx, done + 1, used if c < used else c + 1):
            return True
        if ctx.over:
            return False
    ctx.colors[v] = -1
    return False


def greedy_coloring(list adj):
    cdef ColorCtx ctx
    cdef uint64_t forb
    cdef int v, c, i
    ctx.n = load_adj(adj, ctx.adj)
    for i in range(ctx.n):
        ctx.deg[i] = popcount(ctx.adj[i])
        ctx.colors[i] = -1
    for i in range(ctx.n):
        v = dsatur_pick(&ctx, &forb)
        c = 0
        while (forb >> c) & 1:
            c += 1
        ctx.colors[v] = c
    return [ctx.colors[i] for i in range(ctx.n)]


def color_k(list adj, int k, long long budget):
    """Returns a colour list, ``None`` when infeasible, or ``BUDGET_EXCEEDED``."""
    cdef ColorCtx ctx
    cdef bint ok
    cdef int i
    ctx.n = load_adj(adj, ctx.adj)
    ctx.k = k
    ctx.nodes = 0
    ctx.budget = budget
    ctx.over = False
    for i in range(ctx.n):
        ctx.deg[i] = popcount(ctx.adj[i])
        ctx.colors[i] = -1
    with nogil:
        ok = color_rec(&ctx, 0, 0)
    if ctx.over:
        return BUDGET_EXCEEDED
    if not ok:
        return None
    return [ctx.colors[i] for i in range(ctx.n)]


# --- b-colouring ------------------------------------------------------------

cdef struct BCtx:
    int n
    int k
    uint64_t full
    uint64_t adj[MAXN]
    int cand[MAXN]
    int ncand
    int colors[MAXN]
    int reps[MAXN]
    int64_t nodes
    int64_t budget
    bint over


cdef inline bint b_tick(BCtx* ctx) nogil:
    ctx.nodes += 1
    if ctx.nodes > ctx.budget:
        ctx.over = True
        return False
    return True


cdef bint b_extend(BCtx* ctx) nogil:
    cdef uint64_t nc[MAXN]
    cdef uint64_t need[MAXN]
    cdef uint64_t uncolored = 0, a, missing, pool, avail, dom, vdom = 0, pref, group
    cdef int n = ctx.n, k = ctx.k
    cdef int u, w, c, i, r, v = -1, size, bsize, g
    for u in range(n):
        nc[u] = 0
        need[u] = 0
    for u in range(n):
        c = ctx.colors[u]
        if c < 0:
            uncolored |= bit(u)
            continue
        a = ctx.adj[u]
        while a:
            w = lowbit(a)
            a &= a - 1
            nc[w] |= bit(c)
    for i in range(k):
        r = ctx.reps[i]
        missing = ctx.full & ~bit(i) & ~nc[r]
        if not missing:
            continue
        pool = ctx.adj[r] & uncolored
        if popcount(pool) < popcount(missing):
            return False
        avail = 0
        a = pool
        while a:
            u = lowbit(a)
            a &= a - 1
            avail |= ctx.full & ~nc[u]
            need[u] |= missing
        if missing & ~avail:
            return False
    if not uncolored:
        return True
    bsize = k + 1
    a = uncolored
    while a:
        u = lowbit(a)
        a &= a - 1
        dom = ctx.full & ~nc[u]
        size = popcount(dom)
        if size < bsize:
            v = u
            vdom = dom
            bsize = size
            if size == 0:
                return False
    pref = vdom & need[v]
    for g in range(2):
        group = pref if g == 0 else (vdom & ~pref)
        while group:
            c = lowbit(group)
            group &= group - 1
            if not b_tick(ctx):
                return False
            ctx.colors[v] = c
            if b_extend(ctx):
                return True
            if ctx.over:
                return False
    ctx.colors[v] = -1
    return False


cdef bint b_choose(BCtx* ctx, int i, int start) nogil:
    cdef int idx, v
    if i == ctx.k:
        return b_extend(ctx)
    for idx in range(start, ctx.ncand - (ctx.k - i) + 1):
        v = ctx.cand[idx]
        if not b_tick(ctx):
            return False
        ctx.reps[i] = v
        ctx.colors[v] = i
        if b_choose(ctx, i + 1, idx + 1):
            return True
        if ctx.over:
            return False
        ctx.colors[v] = -1
    return False


def b_coloring(list adj, int k, long long budget):
    """Returns ``(colors, reps)``, ``None`` when infeasible, or ``BUDGET_EXCEEDED``."""
    cdef BCtx ctx
    cdef bint ok
    cdef int i
    ctx.n = load_adj(adj, ctx.adj)
    if k < 1 or k > ctx.n:
        return None
    ctx.k = k
    ctx.full = low_mask(k)
    ctx.ncand = 0
    for i in range(ctx.n):
        ctx.colors[i] = -1
        if popcount(ctx.adj[i]) >= k - 1:
            ctx.cand[ctx.ncand] = i
            ctx.ncand += 1
    if ctx.ncand < k:
        return None
    ctx.nodes = 0
    ctx.budget = budget
    ctx.over = False
    with nogil:
        ok = b_choose(&ctx, 0, 0)
    if ctx.over:
        return BUDGET_EXCEEDED
    if not ok:
        return None
    return [ctx.colors[i] for i in range(ctx.n)], [ctx.reps[i] for i in range(k)]
