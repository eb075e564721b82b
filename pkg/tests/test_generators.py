from __future__ import annotations

import pytest

from bchromatic.bcolor import validate_certificate
from bchromatic.bounds import bound_bipartite, bound_clique_partition, bound_k1t
from bchromatic.generators import gen_bipartite_extremal, gen_clique_partition_extremal, gen_k1t_extremal
from bchromatic.graph import is_bipartite, is_k1t_free
from bchromatic.invariants import biclique_cover_number, chromatic_number, clique_number, clique_partition_number, m_bound


@pytest.mark.parametrize("t, k, n, phi", [(3, 2, 9, 3), (3, 3, 25, 5), (4, 2, 16, 4), (5, 2, 25, 5)])
def test_chain(t, k, n, phi):
    g, cert, claimed = gen_k1t_extremal(t, k)
    assert g.n == n and claimed == phi == (t - 1) * (k - 1) + 1
    assert validate_certificate(g, cert) and cert.b == claimed
    assert chromatic_number(g)[0] == k
    assert is_k1t_free(g, t) and not is_k1t_free(g, t - 1)
    assert bound_k1t(g, t) == claimed


def test_chain_k2_is_chain_of_stars():
    g, _, _ = gen_k1t_extremal(3, 2)
    assert g.num_edges == 3 * 2 + 2 and is_bipartite(g) is not None


@pytest.mark.parametrize("t, k", [(2, 2), (3, 1)])
def test_chain_rejects(t, k):
    with pytest.raises(ValueError):
        gen_k1t_extremal(t, k)


@pytest.mark.parametrize("k, w, n, phi", [(2, 3, 6, 4), (2, 6, 12, 8), (3, 5, 15, 9)])
def test_clique_families(k, w, n, phi):
    g, cert, claimed = gen_clique_partition_extremal(k, w)
    assert g.n == n and claimed == phi
    assert clique_number(g) == w and clique_partition_number(g) == k
    assert validate_certificate(g, cert) and cert.b == claimed
    assert bound_clique_partition(g) == claimed


def test_clique_families_part_sizes():
    g, cert, _ = gen_clique_partition_extremal(3, 5)
    # |A_i| = 1, |B_i| = |C_i| = 2; C-vertices reuse the colours of their B_i
    colors = cert.coloring.assignment
    assert colors[3:9] == colors[9:15]
    assert len(set(colors[:9])) == 9


def test_clique_families_divisibility():
    with pytest.raises(ValueError):
        gen_clique_partition_extremal(2, 4)


@pytest.mark.parametrize("p", [3, 4, 5])
def test_pendant(p):
    g, cert, claimed = gen_bipartite_extremal(p)
    bp = is_bipartite(g)
    assert bp is not None
    assert g.n == 3 * p - 4 and claimed == p
    assert biclique_cover_number(g, bp)[0] == p - 1
    assert g.max_degree == p - 1 and m_bound(g) >= p
    assert validate_certificate(g, cert) and cert.b == p
    assert bound_bipartite(g) == p
    assert sorted(g.degrees())[: p - 2] == [1] * (p - 2)


def test_pendant_rejects_small():
    with pytest.raises(ValueError):
        gen_bipartite_extremal(2)
