"""Acceptance campaigns: exactness on the extremal constructions and the
upper-bound theorems used as oracles on seeded random samples.

Each ``criterion_*`` function returns a :class:`CriterionResult`; the CLI
``selftest`` and ``tests/test_acceptance.py`` both run them.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .ab_family import (
    ABDecomposition,
    ab_certificate,
    find_ab_decomposition,
    is_in_ab,
    phi_via_ab,
    verify_ab_decomposition,
)
from .bcolor import b_chromatic_number, exists_b_coloring, validate_certificate
from .bounds import bound_bipartite, bound_clique_partition, bound_cobipartite, bound_k1t
from .coloring import BColoringCertificate
from .generators import gen_bipartite_extremal, gen_clique_partition_extremal, gen_k1t_extremal
from .graph import Graph, is_bipartite, is_k1t_free
from .harness import FuzzConfig, random_bipartite, random_cobipartite, random_graph, run_fuzz
from .invariants import biclique_cover_number, chromatic_number, clique_number, clique_partition_number, m_bound
from .oracles import brute_b_chromatic_number, brute_biclique_number
from .report import dump_report, make_report


@dataclass
class CriterionResult:
    name: str
    passed: bool
    checked: int
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0
    limit_seconds: Optional[float] = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        limit = f" (limit {self.limit_seconds:.0f}s)" if self.limit_seconds else ""
        text = f"[{status}] {self.name}: {self.checked} checks, {len(self.failures)} failures, {self.seconds:.1f}s{limit}"
        if self.failures:
            text += "\n    " + "\n    ".join(self.failures[:10])
        return text


class _Tally:
    def __init__(self, name: str, limit: Optional[float] = None):
        self.name = name
        self.limit = limit
        self.checked = 0
        self.failures: list[str] = []
        self.start = time.perf_counter()

    def check(self, ok: bool, detail: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(detail)

    def result(self) -> CriterionResult:
        secs = time.perf_counter() - self.start
        if self.limit is not None and secs > self.limit:
            self.failures.append(f"runtime {secs:.1f}s exceeds {self.limit:.0f}s")
        return CriterionResult(self.name, not self.failures, self.checked, self.failures, secs, self.limit)


def all_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


def seeded_graphs(seed: int, count: int, n_lo: int, n_hi: int, p_lo: float = 0.1, p_hi: float = 0.9):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(n_lo, n_hi)
        p = rng.uniform(p_lo, p_hi)
        yield random_graph(n, p, rng.getrandbits(64))


def seeded_split_graphs(kind: str, seed: int, count: int, n_lo: int, n_hi: int):
    """Random bipartite (or co-bipartite) graphs with random side sizes."""
    make = random_bipartite if kind == "bipartite" else random_cobipartite
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(n_lo, n_hi)
        n1 = rng.randint(1, n - 1) if n > 1 else 1
        p = rng.uniform(0.15, 0.85)
        yield make(n1, n - n1, p, rng.getrandbits(64))


def _desc(g: Graph) -> str:
    return f"n={g.n} edges={g.edges()}"


def criterion_sandwich() -> CriterionResult:
    """1. chi <= phi <= m <= Delta+1 on all 5-vertex graphs plus 300 random ones."""
    tally = _Tally("1 sandwich chi<=phi<=m<=Delta+1", limit=300)
    graphs = list(all_graphs(5)) + list(seeded_graphs(101, 300, 6, 9))
    for g in graphs:
        chi = chromatic_number(g)[0]
        phi, cert = b_chromatic_number(g)
        m = m_bound(g)
        tally.check(chi <= phi <= m <= g.max_degree + 1,
                    f"chi={chi} phi={phi} m={m} Delta+1={g.max_degree + 1} for {_desc(g)}")
        tally.check(validate_certificate(g, cert) and cert.b == phi, f"bad certificate for {_desc(g)}")
    return tally.result()


K1T_INSTANCES = ((3, 2), (3, 3), (4, 2))


def criterion_k1t() -> CriterionResult:
    """2. Claw-free samples obey phi <= 2chi-1; the chain construction is exact."""
    tally = _Tally("2 K_1,t-free bound and chain construction")
    rng = random.Random(202)
    kept = 0
    while kept < 200:
        n = rng.randint(3, 9)
        g = random_graph(n, rng.uniform(0.3, 0.95), rng.getrandbits(64))
        if not is_k1t_free(g, 3):
            continue
        kept += 1
        chi = chromatic_number(g)[0]
        phi = b_chromatic_number(g)[0]
        tally.check(phi <= 2 * chi - 1, f"phi={phi} > 2chi-1={2 * chi - 1} for {_desc(g)}")
        tally.check(bound_k1t(g, 3, chi) == 2 * chi - 1, f"claw-free corollary mismatch for {_desc(g)}")
    for t, k in K1T_INSTANCES:
        g, cert, claimed = gen_k1t_extremal(t, k)
        label = f"chain(t={t}, k={k})"
        tally.check(claimed == (t - 1) * (k - 1) + 1, f"{label}: claimed {claimed}")
        tally.check(validate_certificate(g, cert) and cert.b == claimed, f"{label}: certificate invalid")
        chi = chromatic_number(g)[0]
        tally.check(chi == k, f"{label}: chi={chi} != {k}")
        tally.check(is_k1t_free(g, t), f"{label}: contains K_1,{t}")
        tally.check(bound_k1t(g, t, chi) == claimed, f"{label}: upper bound {bound_k1t(g, t, chi)} != {claimed}")
    return tally.result()


CLIQUE_PARTITION_INSTANCES = ((2, 3), (2, 6), (3, 5))


def criterion_clique_partition() -> CriterionResult:
    """3. phi <= floor(k^2 w/(2k-1)) on random graphs; the three-clique-family construction is exact."""
    tally = _Tally("3 clique-partition bound and construction")
    for g in seeded_graphs(303, 300, 2, 9):
        k = clique_partition_number(g)
        w = clique_number(g)
        phi = b_chromatic_number(g)[0]
        bound = bound_clique_partition(g, k, w)
        tally.check(phi <= bound, f"phi={phi} > {bound} (theta={k}, omega={w}) for {_desc(g)}")
    for k, w in CLIQUE_PARTITION_INSTANCES:
        g, cert, claimed = gen_clique_partition_extremal(k, w)
        label = f"cliques(k={k}, w={w})"
        tally.check(claimed * (2 * k - 1) == k * k * w, f"{label}: claimed {claimed}")
        tally.check(clique_number(g) == w, f"{label}: omega={clique_number(g)}")
        tally.check(clique_partition_number(g) == k, f"{label}: theta={clique_partition_number(g)}")
        tally.check(validate_certificate(g, cert) and cert.b == claimed, f"{label}: certificate invalid")
        tally.check(bound_clique_partition(g) == claimed, f"{label}: bound {bound_clique_partition(g)} != {claimed}")
    return tally.result()


def criterion_cobipartite() -> CriterionResult:
    """4. b-colourable with b colours <=> in A_b, on random co-bipartite graphs."""
    tally = _Tally("4 co-bipartite characterisation", limit=600)
    for g in seeded_split_graphs("cobipartite", 404, 200, 2, 10):
        chi = chromatic_number(g)[0]
        for b in range(chi, g.max_degree + 2):
            by_coloring = exists_b_coloring(g, b) is not None
            extracted = is_in_ab(g, b)
            direct = find_ab_decomposition(g, b)
            tally.check(by_coloring == (extracted is not None) == (direct is not None),
                        f"b={b}: coloring={by_coloring} extracted={extracted is not None} "
                        f"direct={direct is not None} for {_desc(g)}")
            for d in (extracted, direct):
                if d is not None:
                    ok = verify_ab_decomposition(g, d) and ab_certificate(g, d) is not None
                    tally.check(ok, f"b={b}: decomposition does not yield a b-colouring for {_desc(g)}")
        phi = b_chromatic_number(g)[0]
        via = phi_via_ab(g)
        tally.check(via == phi, f"phi_via_ab={via} != phi={phi} for {_desc(g)}")
        bound = bound_cobipartite(g)
        tally.check(bound is not None and phi <= bound, f"phi={phi} > floor(4w/3)={bound} for {_desc(g)}")
    return tally.result()


BIPARTITE_INSTANCES = (3, 4, 5)


def criterion_bipartite() -> CriterionResult:
    """5. phi <= floor((n-t+4)/2) on random bipartite graphs; pendant construction exact."""
    tally = _Tally("5 bipartite biclique bound and construction")
    for g in seeded_split_graphs("bipartite", 505, 200, 2, 12):
        phi = b_chromatic_number(g)[0]
        bound = bound_bipartite(g)
        tally.check(bound is not None and phi <= bound, f"phi={phi} > {bound} for {_desc(g)}")
    for p in BIPARTITE_INSTANCES:
        g, cert, claimed = gen_bipartite_extremal(p)
        label = f"pendant(p={p})"
        bp = is_bipartite(g)
        tally.check(bp is not None, f"{label}: not bipartite")
        t = biclique_cover_number(g, bp)[0] if bp else -1
        tally.check(g.n == 3 * p - 4, f"{label}: n={g.n}")
        tally.check(t == p - 1, f"{label}: t={t}")
        tally.check(validate_certificate(g, cert) and cert.b == p == claimed, f"{label}: certificate invalid")
        tally.check(g.max_degree == p - 1, f"{label}: Delta={g.max_degree}")
        tally.check((g.n - t + 4) // 2 == p, f"{label}: floor((n-t+4)/2)={(g.n - t + 4) // 2}")
    return tally.result()


def criterion_oracles() -> CriterionResult:
    """6. Solver agrees with brute force (phi for n<=6, biclique number for n<=7)."""
    tally = _Tally("6 oracle equivalence")
    small = [g for n in range(1, 6) for g in all_graphs(n)]
    small += list(seeded_graphs(606, 100, 6, 6))
    for g in small:
        phi = b_chromatic_number(g)[0]
        ref = brute_b_chromatic_number(g)
        tally.check(phi == ref, f"phi={phi} brute={ref} for {_desc(g)}")
    for g in seeded_split_graphs("bipartite", 607, 100, 2, 7):
        bp = is_bipartite(g)
        t, cover = biclique_cover_number(g, bp)
        side = [0 if v in bp.X else 1 for v in range(g.n)]
        ref = brute_biclique_number(g, side)
        tally.check(t == ref and len(cover) == t and cover.is_valid_for(g, bp),
                    f"t={t} brute={ref} for {_desc(g)}")
    return tally.result()


def _roundtrip_cert(g: Graph, cert: BColoringCertificate) -> bool:
    text = json.dumps(cert.to_json(), sort_keys=True)
    back = BColoringCertificate.from_json(json.loads(text))
    return back == cert and validate_certificate(g, back) and json.dumps(back.to_json(), sort_keys=True) == text


def _roundtrip_ab(g: Graph, d: ABDecomposition) -> bool:
    text = json.dumps(d.to_json(), sort_keys=True)
    back = ABDecomposition.from_json(json.loads(text))
    return back == d and verify_ab_decomposition(g, back) and json.dumps(back.to_json(), sort_keys=True) == text


def criterion_roundtrip() -> CriterionResult:
    """7. Certificates and decompositions survive JSON round trips; reports are byte-stable."""
    tally = _Tally("7 certificate JSON round trip")
    gens = [gen_k1t_extremal(t, k) for t, k in K1T_INSTANCES]
    gens += [gen_clique_partition_extremal(k, w) for k, w in CLIQUE_PARTITION_INSTANCES]
    gens += [gen_bipartite_extremal(p) for p in BIPARTITE_INSTANCES]
    for g, cert, _ in gens:
        tally.check(_roundtrip_cert(g, cert), f"generator certificate for {_desc(g)}")
    for g in seeded_graphs(707, 40, 3, 9):
        _, cert = b_chromatic_number(g)
        tally.check(_roundtrip_cert(g, cert), f"phi certificate for {_desc(g)}")
    for g in seeded_split_graphs("cobipartite", 708, 30, 2, 10):
        for b in range(chromatic_number(g)[0], g.max_degree + 2):
            for d in (is_in_ab(g, b), find_ab_decomposition(g, b)):
                if d is not None:
                    tally.check(_roundtrip_ab(g, d), f"decomposition b={b} for {_desc(g)}")

    def phi_report(g: Graph) -> str:
        phi, cert = b_chromatic_number(g)
        return dump_report(make_report(g, [{"kind": "phi", "value": phi}], {"b_coloring": cert.to_json()}, seed=709))

    sample = list(seeded_graphs(709, 10, 4, 9))
    first = [phi_report(g) for g in sample]
    again = [phi_report(g) for g in seeded_graphs(709, 10, 4, 9)]
    tally.check(first == again, "phi reports differ between identical runs")
    cfg = FuzzConfig(family="general", n_min=4, n_max=8, samples=15, seed=710)
    tally.check(dump_report(run_fuzz(cfg)) == dump_report(run_fuzz(cfg)), "fuzz reports differ between identical runs")
    return tally.result()


CRITERIA = (
    criterion_sandwich,
    criterion_k1t,
    criterion_clique_partition,
    criterion_cobipartite,
    criterion_bipartite,
    criterion_oracles,
    criterion_roundtrip,
)


def run_all(echo=print) -> list[CriterionResult]:
    results = []
    for crit in CRITERIA:
        res = crit()
        echo(res.line())
        results.append(res)
    return results
