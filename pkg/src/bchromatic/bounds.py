"""Upper bounds on the b-chromatic number and a per-graph report.

Every bound is floored to an integer. A bound whose hypothesis fails is
reported as not applicable, never as unknown.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any, Optional

from .bcolor import b_chromatic_number
from .coloring import BColoringCertificate
from .graph import Graph, complement, is_bipartite, is_k1t_free
from .invariants import (
    biclique_cover_number,
    chromatic_number,
    clique_number,
    clique_partition_number,
    m_bound,
)


def bound_k1t(g: Graph, t: int, chi: Optional[int] = None) -> Optional[int]:
    """``(t-1)(chi-1)+1`` for K_{1,t}-free graphs, else ``None``."""
    if t < 3:
        raise ValueError("t must be at least 3; a K_{1,2}-free connected graph is complete")
    if not is_k1t_free(g, t):
        return None
    if chi is None:
        chi = chromatic_number(g)[0]
    return (t - 1) * (chi - 1) + 1


def clique_partition_formula(k: int, omega: int) -> int:
    return (k * k * omega) // (2 * k - 1)


def bound_clique_partition(g: Graph, k: Optional[int] = None, omega: Optional[int] = None) -> int:
    """``floor(k^2 w / (2k-1))`` with ``k`` the clique partition number; all graphs."""
    if k is None:
        k = clique_partition_number(g)
    if omega is None:
        omega = clique_number(g)
    return clique_partition_formula(k, omega)


def bound_cobipartite(g: Graph, omega: Optional[int] = None) -> Optional[int]:
    if is_bipartite(complement(g)) is None:
        return None
    if omega is None:
        omega = clique_number(g)
    return (4 * omega) // 3


def bound_bipartite(g: Graph) -> Optional[int]:
    """``floor((n - t + 4)/2)`` with ``t`` the biclique number; bipartite graphs only."""
    bp = is_bipartite(g)
    if bp is None:
        return None
    t, _ = biclique_cover_number(g, bp)
    return (g.n - t + 4) // 2


@dataclass
class BoundRecord:
    name: str
    applicable: bool
    hypothesis: str
    value: Optional[int]


@dataclass
class BoundsReport:
    n: int
    records: list[BoundRecord]
    exact_phi: Optional[int] = None
    certificate: Optional[BColoringCertificate] = None
    violations: list[str] = field(default_factory=list)
    status: str = "unchecked"  # unchecked | pass | violation | skipped

    def value(self, name: str) -> Optional[int]:
        for rec in self.records:
            if rec.name == name:
                return rec.value
        raise KeyError(name)

    def applicable_values(self) -> dict[str, int]:
        return {r.name: r.value for r in self.records if r.applicable}

    def to_json(self) -> dict[str, Any]:
        return {
            "bounds": [asdict(r) for r in self.records],
            "exact_phi": self.exact_phi,
            "violations": list(self.violations),
            "status": self.status,
        }


def bounds_report(g: Graph, compute_exact: bool = False, budget: Optional[int] = None) -> BoundsReport:
    if g.n == 0:
        raise ValueError("bounds need at least one vertex")
    chi = chromatic_number(g, budget)[0]
    omega = clique_number(g)
    theta = clique_partition_number(g, budget)
    records: list[BoundRecord] = []

    for t in (3, 4, 5):
        free = is_k1t_free(g, t)
        records.append(BoundRecord(
            f"k1t_free(t={t})", free,
            f"K_1,{t}-free={free}, chi={chi}",
            (t - 1) * (chi - 1) + 1 if free else None,
        ))
    claw_free = records[0].applicable
    records.append(BoundRecord(
        "claw_free_corollary", claw_free, f"claw-free={claw_free}, chi={chi}",
        2 * chi - 1 if claw_free else None,
    ))
    records.append(BoundRecord(
        "clique_partition", True, f"theta={theta}, omega={omega}",
        clique_partition_formula(theta, omega),
    ))
    cobip = is_bipartite(complement(g)) is not None
    records.append(BoundRecord(
        "cobipartite", cobip, f"complement bipartite={cobip}, omega={omega}",
        (4 * omega) // 3 if cobip else None,
    ))
    bp = is_bipartite(g)
    if bp is not None:
        t, _ = biclique_cover_number(g, bp)
        records.append(BoundRecord(
            "bipartite", True, f"bipartite=True, n={g.n}, biclique number={t}", (g.n - t + 4) // 2,
        ))
    else:
        records.append(BoundRecord("bipartite", False, "bipartite=False", None))
    records.append(BoundRecord("m_bound", True, "all graphs", m_bound(g)))
    records.append(BoundRecord("max_degree_plus_one", True, "all graphs", g.max_degree + 1))

    report = BoundsReport(g.n, records)
    if compute_exact:
        phi, cert = b_chromatic_number(g, budget)
        report.exact_phi = phi
        report.certificate = cert
        report.violations = [
            f"{r.name}: phi={phi} > {r.value}" for r in records if r.applicable and phi > r.value
        ]
        if phi < chi:
            report.violations.append(f"chromatic lower bound: phi={phi} < chi={chi}")
        report.status = "violation" if report.violations else "pass"
    return report
