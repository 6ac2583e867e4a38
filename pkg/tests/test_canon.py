from __future__ import annotations

import random
from itertools import combinations, permutations

from hypothesis import given, settings, strategies as st

import bruteforce as bf
from genramsey.canon import (
    are_isomorphic,
    automorphism_generators,
    canonical_certificate,
    canonical_form,
    canonical_labelling,
)
from genramsey.graph import (
    Graph,
    complement,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    star_graph,
)


@st.composite
def graphs(draw, max_order=9):
    p = draw(st.integers(0, max_order))
    pairs = list(combinations(range(p), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(p, [e for e, c in zip(pairs, chosen) if c])


def _group_order(n, gens):
    # closure of the generated group, fine for small n
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = tuple(g[a[i]] for i in range(n))
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return len(seen)


def test_p4_relabellings_agree():
    g = path_graph(4)
    h = g.relabel([2, 0, 3, 1])
    assert canonical_certificate(g) == canonical_certificate(h)


def test_p4_vs_star():
    assert canonical_certificate(path_graph(4)) != canonical_certificate(star_graph(3))


def test_c5_vs_complement():
    assert canonical_certificate(cycle_graph(5)) == canonical_certificate(complement(cycle_graph(5)))


def test_certificate_is_bytes():
    assert isinstance(canonical_certificate(complete_graph(3)), bytes)


def test_all_labelled_graphs_up_to_order_5():
    # certificate classes coincide with the brute-force canonical masks
    for p in range(1, 6):
        by_cert = {}
        for mask in range(1 << len(bf.pairs(p))):
            g = Graph._trusted(p, bf.adjacency(p, mask))
            by_cert.setdefault(canonical_certificate(g), set()).add(bf.canonical_mask(p, mask))
        assert all(len(v) == 1 for v in by_cert.values())
        assert len(by_cert) == len(bf.classes(p))


def test_pairs_of_order_6_against_permutation_search():
    rng = random.Random(20261015)
    masks = [rng.randrange(1 << 15) for _ in range(60)]
    # add isomorphic copies so both outcomes are exercised
    for m in masks[:20]:
        perm = list(range(6))
        rng.shuffle(perm)
        g = Graph._trusted(6, bf.adjacency(6, m)).relabel(perm)
        masks.append(bf.mask_of(g.adj))
    for a, b in combinations(masks, 2):
        ga = Graph._trusted(6, bf.adjacency(6, a))
        gb = Graph._trusted(6, bf.adjacency(6, b))
        if bin(a).count("1") != bin(b).count("1"):
            continue
        expect = bf.are_isomorphic(6, a, b)
        assert (canonical_certificate(ga) == canonical_certificate(gb)) == expect
        assert are_isomorphic(ga, gb) == expect


def test_petersen_automorphism_group_order():
    assert _group_order(10, automorphism_generators(petersen_graph())) == 120


def test_cycle_and_complete_groups():
    assert _group_order(6, automorphism_generators(cycle_graph(6))) == 12
    assert _group_order(5, automorphism_generators(complete_graph(5))) == 120


@settings(max_examples=80, deadline=None)
@given(graphs(max_order=6))
def test_group_order_matches_permutation_count(g):
    n = g.order
    edges = set(g.edges())
    count = sum(
        1
        for perm in permutations(range(n))
        if {tuple(sorted((perm[u], perm[v]))) for u, v in edges} == edges
    )
    assert _group_order(n, automorphism_generators(g)) == count


@settings(max_examples=200, deadline=None)
@given(graphs(), st.randoms(use_true_random=False))
def test_invariant_under_relabelling(g, rnd):
    perm = list(range(g.order))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert canonical_form(g) == canonical_form(h)
    assert are_isomorphic(g, h)


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_labelling_reproduces_code(g):
    lab = canonical_labelling(g.adj)
    pos = lab.position
    assert g.relabel(pos).adj == lab.code
    for gen in lab.generators:
        assert g.relabel(list(gen)) == g
