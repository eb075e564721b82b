from __future__ import annotations

import pytest
from hypothesis import given

from bchromatic.bcolor import b_chromatic_number
from bchromatic.bounds import (
    bound_bipartite,
    bound_clique_partition,
    bound_cobipartite,
    bound_k1t,
    bounds_report,
    clique_partition_formula,
)
from bchromatic.generators import gen_bipartite_extremal, gen_clique_partition_extremal, gen_k1t_extremal
from bchromatic.graph import (
    complement,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    is_k1t_free,
    path_graph,
    star_graph,
)
from bchromatic.invariants import clique_number, clique_partition_number

from conftest import graphs


class TestK1t:
    def test_c5(self):
        assert bound_k1t(cycle_graph(5), 3) == 5

    def test_chain_is_tight(self):
        g, _, claimed = gen_k1t_extremal(3, 2)
        assert bound_k1t(g, 3) == 3 == claimed
        assert b_chromatic_number(g)[0] == 3

    def test_claw(self):
        assert bound_k1t(star_graph(3), 3) is None

    def test_t_two_rejected(self):
        with pytest.raises(ValueError):
            bound_k1t(complete_graph(3), 2)


class TestCliquePartition:
    @pytest.mark.parametrize("n", [1, 3, 6])
    def test_complete(self, n):
        assert bound_clique_partition(complete_graph(n)) == n

    def test_three_clique_family_tight(self):
        g, _, _ = gen_clique_partition_extremal(2, 3)
        assert bound_clique_partition(g) == 4 == b_chromatic_number(g)[0]

    def test_c5(self):
        # theta = 3 and omega = 2 give floor(9*2/5) = 3
        assert clique_partition_formula(3, 2) == 3
        assert bound_clique_partition(cycle_graph(5)) == 3 == b_chromatic_number(cycle_graph(5))[0]


class TestCobipartite:
    def test_three_clique_family(self):
        g, _, _ = gen_clique_partition_extremal(2, 3)
        assert bound_cobipartite(g) == 4

    @pytest.mark.parametrize("n", [1, 3, 5])
    def test_complete(self, n):
        assert bound_cobipartite(complete_graph(n)) == 4 * n // 3

    def test_complement_of_p4(self):
        g = complement(path_graph(4))
        assert bound_cobipartite(g) == 2 and b_chromatic_number(g)[0] == 2

    def test_not_applicable(self):
        assert bound_cobipartite(cycle_graph(5)) is None


class TestBipartite:
    def test_pendant_construction_tight(self):
        g, _, _ = gen_bipartite_extremal(3)
        assert bound_bipartite(g) == 3 == b_chromatic_number(g)[0]

    def test_k33(self):
        g = complete_bipartite_graph(3, 3)
        assert bound_bipartite(g) == 4 and b_chromatic_number(g)[0] == 2

    def test_edgeless(self):
        assert bound_bipartite(empty_graph(4)) == 2
        assert b_chromatic_number(empty_graph(4))[0] == 1

    def test_not_applicable(self):
        assert bound_bipartite(cycle_graph(5)) is None


class TestReport:
    def test_c5(self):
        r = bounds_report(cycle_graph(5), compute_exact=True)
        assert r.value("k1t_free(t=3)") == 5
        assert r.value("clique_partition") == 3
        assert r.value("m_bound") == 3
        assert r.value("max_degree_plus_one") == 3
        assert r.exact_phi == 3 and r.violations == [] and r.status == "pass"

    def test_k4(self):
        r = bounds_report(complete_graph(4), compute_exact=True)
        assert all(v >= 4 for v in r.applicable_values().values())
        assert r.exact_phi == 4

    def test_pendant_p4(self):
        g, _, _ = gen_bipartite_extremal(4)
        r = bounds_report(g, compute_exact=True)
        assert r.value("bipartite") == 4 == r.exact_phi

    def test_value_iff_applicable(self):
        r = bounds_report(star_graph(4))
        for rec in r.records:
            assert (rec.value is not None) == rec.applicable
        assert r.exact_phi is None and r.status == "unchecked"

    @given(graphs(min_n=1, max_n=8))
    def test_no_violations(self, g):
        r = bounds_report(g, compute_exact=True)
        assert r.violations == []
        for value in r.applicable_values().values():
            assert r.exact_phi <= value

    @given(graphs(min_n=1, max_n=8))
    def test_consistency_between_theorems(self, g):
        r = bounds_report(g)
        if r.value("cobipartite") is not None and clique_partition_number(g) == 2:
            assert r.value("cobipartite") == clique_partition_formula(2, clique_number(g))
        if is_k1t_free(g, 3):
            assert r.value("claw_free_corollary") == r.value("k1t_free(t=3)")
