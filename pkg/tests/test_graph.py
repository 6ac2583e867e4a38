from __future__ import annotations

import math
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

import bruteforce as bf
from genramsey.graph import (
    Graph,
    complement,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    empty_graph,
    girth,
    has_sparse_subset,
    has_tree_component,
    independence_number,
    induced_edge_extrema,
    is_forest,
    is_nm_graph,
    path_graph,
    petersen_graph,
    satisfies_ks_condition,
    star_graph,
)
from genramsey.canon import are_isomorphic


@st.composite
def graphs(draw, max_order=9):
    p = draw(st.integers(0, max_order))
    pairs = list(combinations(range(p), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(p, [e for e, c in zip(pairs, chosen) if c])


def K(n):
    return complete_graph(n)


def union(*gs):
    return disjoint_union(list(gs))


class TestConstruction:
    def test_rejects_asymmetric_rows(self):
        with pytest.raises(ValueError):
            Graph(2, [0b10, 0])

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph(1, [1])

    def test_rejects_bits_outside(self):
        with pytest.raises(ValueError):
            Graph(2, [0b100, 0])

    def test_rejects_order_above_64(self):
        with pytest.raises(ValueError):
            Graph(65)

    def test_order_64_allowed(self):
        g = complete_graph(64)
        assert g.num_edges() == 64 * 63 // 2

    def test_immutable(self):
        g = K(3)
        with pytest.raises(AttributeError):
            g.order = 4

    def test_from_edges_and_degrees(self):
        g = star_graph(4)
        assert g.order == 5 and g.degrees() == [4, 1, 1, 1, 1]


class TestComplement:
    def test_k4_to_edgeless(self):
        assert complement(K(4)) == empty_graph(4)

    def test_c5_self_complementary(self):
        assert are_isomorphic(complement(cycle_graph(5)), cycle_graph(5))

    def test_p4_self_complementary(self):
        assert are_isomorphic(complement(path_graph(4)), path_graph(4))

    @given(graphs())
    def test_involution_and_edge_sum(self, g):
        h = complement(g)
        assert complement(h) == g
        assert g.num_edges() + h.num_edges() == g.order * (g.order - 1) // 2


class TestDisjointUnion:
    def test_two_k2_and_k1(self):
        g = union(K(2), K(2), K(1))
        assert (g.order, g.num_edges(), independence_number(g)) == (5, 2, 3)

    def test_empty_list(self):
        assert disjoint_union([]).order == 0

    def test_k3_k2(self):
        g = union(K(3), K(2))
        assert (g.order, g.num_edges(), independence_number(g)) == (5, 4, 2)

    def test_rejects_order_above_64(self):
        with pytest.raises(ValueError):
            disjoint_union([K(40), K(25)])


class TestIndependenceNumber:
    def test_k6(self):
        assert independence_number(K(6)) == 1

    def test_three_k2(self):
        assert independence_number(union(K(2), K(2), K(2))) == 3

    def test_petersen(self):
        g = petersen_graph()
        # exhaustive over all 2^10 subsets
        best = max(
            bin(s).count("1")
            for s in range(1 << 10)
            if all(not (s >> u & 1 and s >> v & 1) for u, v in g.edges())
        )
        assert best == 4 == independence_number(g)

    def test_empty_graph(self):
        assert independence_number(empty_graph(0)) == 0

    def test_turan_graph(self):
        assert independence_number(complete_multipartite([3, 2, 2])) == 3

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_order=8))
    def test_matches_subset_scan(self, g):
        assert independence_number(g) == bf.alpha(g.order, bf.mask_of(g.adj))

    def test_matches_vertex_cover_scan_on_all_small_graphs(self, graphs_by_order):
        # alpha = order - minimum vertex cover, the cover found by scanning subsets
        for p in range(1, 8):
            for adj in graphs_by_order[p]:
                g = Graph._trusted(p, adj)
                edges = g.edges()
                cover = min(
                    bin(s).count("1")
                    for s in range(1 << p)
                    if all(s >> u & 1 or s >> v & 1 for u, v in edges)
                ) if p <= 6 else None
                if cover is not None:
                    assert independence_number(g) == p - cover


class TestInducedExtrema:
    def test_three_k2_five_subsets(self):
        g = union(K(2), K(2), K(2))
        assert induced_edge_extrema(g, 5) == (2, 2)
        assert sorted(set(bf.induced_counts(6, bf.mask_of(g.adj), 5))) == [2]

    def test_k5_triples(self):
        assert induced_edge_extrema(K(5), 3) == (3, 3)

    def test_edgeless(self):
        assert induced_edge_extrema(empty_graph(6), 4) == (0, 0)

    def test_rejects_n_above_order(self):
        with pytest.raises(ValueError):
            induced_edge_extrema(K(3), 4)

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_order=7), st.data())
    def test_matches_brute_force(self, g, data):
        n = data.draw(st.integers(0, g.order))
        counts = bf.induced_counts(g.order, bf.mask_of(g.adj), n)
        assert induced_edge_extrema(g, n) == (min(counts), max(counts))

    @given(graphs())
    def test_whole_graph(self, g):
        assert induced_edge_extrema(g, g.order) == (g.num_edges(), g.num_edges())


class TestNMAndKS:
    def test_three_k2_is_52(self):
        assert is_nm_graph(union(K(2), K(2), K(2)), 5, 2)

    def test_k3_2k2_is_64(self):
        assert is_nm_graph(union(K(3), K(2), K(2)), 6, 4)
        assert not is_nm_graph(union(K(3), K(2), K(2)), 6, 3)

    def test_k3_not_32(self):
        assert not is_nm_graph(K(3), 3, 2)

    def test_nm_rejects_small_order(self):
        with pytest.raises(ValueError):
            is_nm_graph(K(3), 4, 1)

    def test_ks_k5(self):
        assert satisfies_ks_condition(K(5), 3, 3)

    def test_ks_c5(self):
        assert satisfies_ks_condition(cycle_graph(5), 3, 1)

    def test_ks_three_k2_holds(self):
        # any 4 vertices of 3K2 contain a whole K2
        assert satisfies_ks_condition(union(K(2), K(2), K(2)), 4, 1)

    def test_ks_two_k2_two_k1_fails(self):
        assert not satisfies_ks_condition(union(K(2), K(2), K(1), K(1)), 4, 1)

    def test_ks_rejects_small_order(self):
        with pytest.raises(ValueError):
            satisfies_ks_condition(K(3), 4, 1)

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_order=7), st.data())
    def test_complementation_identity(self, g, data):
        # complement has an n-set with <= r*-1 edges iff g has one with >= C(n,2)-r*+1
        if g.order == 0:
            return
        n = data.draw(st.integers(1, g.order))
        top = n * (n - 1) // 2
        r_star = data.draw(st.integers(1, max(1, top)))
        h = complement(g)
        left = has_sparse_subset(h.adj, h.order, n, r_star - 1)
        right = not is_nm_graph(g, n, top - r_star)
        assert left == right

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_order=7), st.data())
    def test_nm_matches_brute_force(self, g, data):
        if g.order == 0:
            return
        n = data.draw(st.integers(1, g.order))
        m = data.draw(st.integers(0, n * (n - 1) // 2))
        assert is_nm_graph(g, n, m) == bf.is_nm(g.order, bf.mask_of(g.adj), n, m)


class TestGirthAndTrees:
    def test_c5(self):
        assert girth(cycle_graph(5)) == 5

    def test_tree(self):
        assert girth(star_graph(5)) == math.inf and girth(path_graph(6)) == math.inf

    def test_k4(self):
        assert girth(K(4)) == 3

    def test_petersen(self):
        assert girth(petersen_graph()) == 5

    def test_tree_component_examples(self):
        assert has_tree_component(union(K(3), K(1)))
        assert not has_tree_component(union(K(3), cycle_graph(4)))
        assert has_tree_component(union(K(2), K(2), K(2)))

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_order=7))
    def test_girth_matches_cycle_search(self, g):
        mask = bf.mask_of(g.adj)
        gi = girth(g)
        for length in range(3, g.order + 1):
            assert bf.has_cycle_at_most(g.order, mask, length) == (gi <= length)

    @given(graphs())
    def test_forest_iff_infinite_girth(self, g):
        assert is_forest(g) == (girth(g) == math.inf)
