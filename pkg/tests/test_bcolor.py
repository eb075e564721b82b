from __future__ import annotations

import random
from itertools import product

import pytest
from hypothesis import given

from bchromatic._kernels import SearchBudgetExceeded
from bchromatic.bcolor import (
    b_chromatic_number,
    exists_b_coloring,
    is_b_coloring,
    is_proper,
    representatives,
    validate_certificate,
)
from bchromatic.coloring import BColoringCertificate, Coloring
from bchromatic.generators import gen_bipartite_extremal, gen_clique_partition_extremal, gen_k1t_extremal
from bchromatic.graph import Graph, complete_bipartite_graph, complete_graph, cycle_graph, path_graph
from bchromatic.harness import random_graph, random_tree
from bchromatic.invariants import chromatic_number, m_bound
from bchromatic.oracles import brute_b_chromatic_number, brute_b_spectrum

from conftest import graphs


def hypercube3() -> Graph:
    return Graph.from_edges(8, [(u, u ^ (1 << i)) for u in range(8) for i in range(3) if u < u ^ (1 << i)])


class TestColoring:
    def test_rejects_gap(self):
        with pytest.raises(ValueError):
            Coloring((0, 2))

    def test_class_sizes(self):
        c = Coloring((0, 1, 0, 2, 2, 2))
        assert c.b == 3 and c.class_sizes == {1: 1, 2: 1, 3: 1}

    @given(graphs(min_n=1, max_n=8))
    def test_counting_identity(self, g):
        _, cert = b_chromatic_number(g)
        sizes = cert.coloring.class_sizes
        assert sum(j * i_j for j, i_j in sizes.items()) == g.n
        assert sum(sizes.values()) == cert.b


class TestIsProper:
    def test_rainbow_triangle(self):
        assert is_proper(complete_graph(3), Coloring((0, 1, 2)))

    def test_shared_colour(self):
        assert not is_proper(complete_graph(3), Coloring((0, 0, 1)))

    def test_missing_vertex(self):
        with pytest.raises(ValueError):
            is_proper(complete_graph(3), Coloring((0, 1)))

    @given(graphs(min_n=1, max_n=8))
    def test_chromatic_witness(self, g):
        assert is_proper(g, chromatic_number(g)[1])


class TestRepresentatives:
    def test_rainbow_triangle(self):
        reps = representatives(complete_graph(3), Coloring((0, 1, 2)))
        assert reps == {0: {0}, 1: {1}, 2: {2}}

    def test_path(self):
        reps = representatives(path_graph(3), Coloring((0, 1, 0)))
        assert reps == {0: {0, 2}, 1: {1}}

    def test_three_clique_family(self):
        g, cert, _ = gen_clique_partition_extremal(2, 3)
        reps = representatives(g, cert.coloring)
        # A-vertices are 0, 1 and B-vertices 2, 3; C-vertices 4, 5 are not representatives
        assert set().union(*reps.values()) == {0, 1, 2, 3}

    def test_improper(self):
        with pytest.raises(ValueError):
            representatives(complete_graph(3), Coloring((0, 0, 1)))


class TestIsBColoring:
    def test_k4_rainbow(self):
        cert = is_b_coloring(complete_graph(4), Coloring((0, 1, 2, 3)), 4)
        assert cert is not None and cert.reps == (0, 1, 2, 3)

    def test_k33_no_proper_3_colouring_is_b(self):
        g = complete_bipartite_graph(3, 3)
        seen = 0
        for labels in product(range(3), repeat=6):
            if len(set(labels)) != 3:
                continue
            c = Coloring(labels)
            if is_proper(g, c):
                seen += 1
                assert is_b_coloring(g, c, 3) is None
        assert seen > 0

    def test_pendant_construction(self):
        g, cert, _ = gen_bipartite_extremal(3)
        found = is_b_coloring(g, cert.coloring, 3)
        assert found is not None and validate_certificate(g, found)

    def test_wrong_count(self):
        assert is_b_coloring(complete_graph(3), Coloring((0, 1, 2)), 4) is None


class TestExists:
    def test_c5_three(self):
        assert 3 in brute_b_spectrum(cycle_graph(5))
        cert = exists_b_coloring(cycle_graph(5), 3)
        assert cert is not None and validate_certificate(cycle_graph(5), cert)

    def test_k33_three(self):
        g = complete_bipartite_graph(3, 3)
        assert 3 not in brute_b_spectrum(g)
        assert exists_b_coloring(g, 3) is None

    def test_k4_rainbow(self):
        cert = exists_b_coloring(complete_graph(4), 4)
        assert sorted(cert.coloring.assignment) == [0, 1, 2, 3]

    def test_out_of_range(self):
        assert exists_b_coloring(complete_graph(3), 0) is None
        assert exists_b_coloring(complete_graph(3), 4) is None

    def test_spectrum_gap(self):
        # the 3-cube has b-colourings with 2 and 4 colours but none with 3
        g = hypercube3()
        assert brute_b_spectrum(g) == {2, 4}
        assert [k for k in range(1, 9) if exists_b_coloring(g, k)] == [2, 4]
        assert b_chromatic_number(g)[0] == 4

    @given(graphs(min_n=1, max_n=6))
    def test_spectrum_matches_brute_force(self, g):
        spectrum = brute_b_spectrum(g)
        for k in range(1, g.n + 1):
            cert = exists_b_coloring(g, k)
            assert (cert is not None) == (k in spectrum)
            if cert is not None:
                assert validate_certificate(g, cert) and cert.b == k

    @given(graphs(min_n=1, max_n=8))
    def test_chromatic_count_always_feasible(self, g):
        assert exists_b_coloring(g, chromatic_number(g)[0]) is not None

    def test_budget(self):
        g = random_graph(14, 0.5, 3)
        with pytest.raises(SearchBudgetExceeded):
            exists_b_coloring(g, m_bound(g), budget=5)


class TestBChromatic:
    @pytest.mark.parametrize("n", [1, 2, 4, 6])
    def test_complete(self, n):
        assert b_chromatic_number(complete_graph(n))[0] == n

    def test_path5(self):
        g = path_graph(5)
        assert brute_b_chromatic_number(g) == 3
        assert b_chromatic_number(g)[0] == 3

    def test_chain_construction(self):
        g, _, _ = gen_k1t_extremal(3, 2)
        assert b_chromatic_number(g)[0] == 3

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            b_chromatic_number(Graph(0, ()))

    @given(graphs(min_n=1, max_n=7))
    def test_sandwich_and_certificate(self, g):
        phi, cert = b_chromatic_number(g)
        assert chromatic_number(g)[0] <= phi <= m_bound(g) <= g.max_degree + 1
        assert validate_certificate(g, cert) and cert.b == phi
        assert is_b_coloring(g, cert.coloring, phi) is not None

    @given(graphs(min_n=1, max_n=6))
    def test_matches_brute_force(self, g):
        assert b_chromatic_number(g)[0] == brute_b_chromatic_number(g)

    def test_trees(self):
        rng = random.Random(5)
        for _ in range(60):
            t = random_tree(rng.randint(1, 14), rng.getrandbits(64))
            m = m_bound(t)
            assert m - 1 <= b_chromatic_number(t)[0] <= m


def test_certificate_json_roundtrip():
    g, cert, _ = gen_k1t_extremal(3, 3)
    back = BColoringCertificate.from_json(cert.to_json())
    assert back == cert and validate_certificate(g, back)


def test_validate_rejects_bad_representative():
    g = path_graph(3)
    cert = BColoringCertificate(Coloring((0, 1, 0)), (0, 0))
    assert not validate_certificate(g, cert)
