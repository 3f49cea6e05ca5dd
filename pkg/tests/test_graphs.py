"""Graph representation, graph6 I/O, motif counts, girth, tree-width."""

import random

import pytest

from chromroots.graphs import (
    Graph,
    Graph6Error,
    UnsupportedPatternError,
    complete_bipartite,
    complete_graph,
    complete_minus_matching,
    count_clique_unions,
    count_cliques,
    count_cycles,
    count_induced_copies,
    count_motif,
    count_subgraph_copies,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_labeled,
    girth,
    named_pattern,
    parse_graph6,
    path_graph,
    random_graph,
    treewidth_exact,
    wheel_graph,
    write_graph6,
    _isomorphic_small,
)


def correction_pattern():
    # order-5 pattern with 2 triangles, 8 disjoint edge pairs, none induced
    return disjoint_union(path_graph(3), complete_graph(2)).complement()


# -- graph6 --------------------------------------------------------------------


def test_graph6_hand_encoded_values():
    assert write_graph6(empty_graph(0)) == "?"
    assert write_graph6(complete_graph(2)) == "A_"
    assert write_graph6(complete_graph(4)) == "C~"
    assert parse_graph6("?").n == 0
    assert parse_graph6("A_") == complete_graph(2)
    assert parse_graph6("C~") == complete_graph(4)


def test_graph6_round_trip_exhaustive_small():
    for n in range(0, 5):
        for g in enumerate_labeled(n):
            assert parse_graph6(write_graph6(g)) == g


def test_graph6_round_trip_random_orders():
    rng = random.Random(1)
    for n in (10, 30, 62, 63, 64):
        g = random_graph(n, 0.4, rng)
        assert parse_graph6(write_graph6(g)) == g


def test_graph6_header_prefix_accepted():
    assert parse_graph6(">>graph6<<A_") == complete_graph(2)


def test_graph6_errors_carry_offsets():
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("A\x1f")
    assert exc.value.offset == 1
    with pytest.raises(Graph6Error):
        parse_graph6("D")  # truncated bit vector
    with pytest.raises(Graph6Error):
        parse_graph6("A__")  # trailing bytes
    with pytest.raises(Graph6Error):
        parse_graph6("")


def test_graph_invariants_enforced():
    with pytest.raises(ValueError):
        Graph(2, (1, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, (1,))  # self-loop


# -- constructors and complement --------------------------------------------------


def test_complete_bipartite_shapes():
    assert _isomorphic_small(complete_bipartite(2, 2), cycle_graph(4))
    assert complete_bipartite(2, 3).m == 6
    star = complete_bipartite(1, 5)
    assert star.n == 6 and sorted(star.degrees()) == [1, 1, 1, 1, 1, 5]


def test_complement_involution_and_edge_split():
    rng = random.Random(2)
    for _ in range(25):
        g = random_graph(rng.randint(1, 12), rng.random(), rng)
        assert g.complement().complement() == g
        assert g.m + g.complement().m == g.n * (g.n - 1) // 2
    assert _isomorphic_small(cycle_graph(4).complement(), disjoint_union(complete_graph(2), complete_graph(2)))
    assert complete_graph(4).complement() == empty_graph(4)
    assert _isomorphic_small(
        complete_bipartite(2, 3).complement(),
        disjoint_union(complete_graph(2), complete_graph(3)),
    )


def test_complete_minus_matching():
    assert _isomorphic_small(complete_minus_matching(4, 2), cycle_graph(4))
    assert complete_minus_matching(5, 2).m == 8
    assert complete_minus_matching(6, 0) == complete_graph(6)
    with pytest.raises(ValueError):
        complete_minus_matching(3, 2)


# -- girth -------------------------------------------------------------------------


def test_girth():
    assert girth(cycle_graph(5)) == 5
    assert girth(complete_graph(4)) == 3
    assert girth(path_graph(6)) is None
    assert girth(empty_graph(3)) is None
    assert girth(complete_bipartite(2, 3)) == 4
    assert girth(wheel_graph(5)) == 3


# -- motif counting ------------------------------------------------------------------


def test_counts_on_correction_pattern():
    h = correction_pattern()
    assert count_cliques(h, 3) == 2
    assert count_induced_copies(h, complete_graph(3)) == 2
    assert count_clique_unions(h, (1, 1)) == 8
    pair = disjoint_union(complete_graph(2), complete_graph(2))
    assert count_subgraph_copies(h, pair) == 8
    assert count_induced_copies(h, pair) == 0
    assert count_motif(h, (1, 1)) == 8
    assert count_motif(h, (1, 1), induced=True) == 0


def test_simple_motif_counts():
    assert count_clique_unions(cycle_graph(4), (1, 1)) == 2
    assert count_cliques(complete_graph(4), 3) == 4
    assert count_motif(complete_graph(4), "K3") == 4
    assert count_motif(cycle_graph(4), (1, 1)) == 2
    assert count_cycles(wheel_graph(5), 4, induced=True) == 1
    assert count_cycles(complete_graph(5), 5) == 12
    assert count_induced_copies(complete_bipartite(2, 3), named_pattern("K2,3")) == 1


def test_clique_union_counts_in_k4():
    k4 = complete_graph(4)
    assert count_clique_unions(k4, (1,)) == 6
    assert count_clique_unions(k4, (1, 1)) == 3
    assert count_clique_unions(k4, (2,)) == 4
    assert count_clique_unions(k4, (3,)) == 1


def test_induced_at_most_subgraph_count():
    rng = random.Random(3)
    patterns = [path_graph(3), cycle_graph(4), complete_bipartite(1, 3)]
    for _ in range(20):
        g = random_graph(rng.randint(4, 8), rng.random(), rng)
        for pat in patterns:
            assert count_induced_copies(g, pat) <= count_subgraph_copies(g, pat)


def test_product_union_inequality():
    # eta(A) * eta(B) >= eta(A disjoint-union B)
    rng = random.Random(4)
    shapes = {"K2": (1,), "K3": (2,), "2K2": (1, 1)}
    union = {
        ("K2", "K2"): (1, 1),
        ("K2", "K3"): (2, 1),
        ("K2", "2K2"): (1, 1, 1),
        ("K3", "K3"): (2, 2),
        ("K3", "2K2"): (2, 1, 1),
    }
    for _ in range(40):
        g = random_graph(rng.randint(2, 8), rng.random(), rng)
        for (a, b), u in union.items():
            prod = count_clique_unions(g, shapes[a]) * count_clique_unions(g, shapes[b])
            assert prod >= count_clique_unions(g, u), (a, b, g)


def test_same_order_comparison():
    # a disjoint union of cliques on r vertices is never rarer than K_r
    rng = random.Random(5)
    cases = [((1, 1), 4), ((2, 1), 5), ((1, 1, 1), 6), ((2, 2), 6), ((3, 1), 6)]
    for _ in range(40):
        g = random_graph(rng.randint(2, 8), rng.random(), rng)
        for weights, r in cases:
            assert count_clique_unions(g, weights) >= count_cliques(g, r)


def test_pattern_caps_and_errors():
    with pytest.raises(UnsupportedPatternError):
        named_pattern("H")
    with pytest.raises(UnsupportedPatternError):
        count_clique_unions(complete_graph(8), (3, 2))  # weight 5
    with pytest.raises(ValueError):
        count_cycles(random_graph(17, 0.2, random.Random(0)), 11)
    # allowed: long cycles on small graphs
    assert count_cycles(cycle_graph(11), 11) == 1


# -- tree-width -----------------------------------------------------------------------


def test_treewidth_complete_bipartite_grid():
    for p in range(1, 6):
        for q in range(1, 6):
            assert treewidth_exact(complete_bipartite(p, q)) == min(p, q)


def test_treewidth_basics():
    assert treewidth_exact(complete_graph(5)) == 4
    assert treewidth_exact(path_graph(7)) == 1
    assert treewidth_exact(cycle_graph(7)) == 2
    assert treewidth_exact(complete_graph(1)) == 0
    assert treewidth_exact(empty_graph(4)) == 0
    rng = random.Random(6)
    tree = Graph.from_edges(8, [(i + 1, rng.randint(0, i)) for i in range(7)])
    assert treewidth_exact(tree) == 1
    with pytest.raises(ValueError):
        treewidth_exact(random_graph(15, 0.5, rng))


# -- enumeration -----------------------------------------------------------------------


def test_enumeration_counts_and_cap():
    assert sum(1 for _ in enumerate_labeled(2)) == 2
    assert sum(1 for _ in enumerate_labeled(3)) == 8
    assert sum(1 for _ in enumerate_labeled(4)) == 64
    with pytest.raises(ValueError):
        next(enumerate_labeled(8))


def test_edge_mask_round_trip():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(1, 7)
        mask = rng.getrandbits(n * (n - 1) // 2)
        assert Graph.from_edge_mask(n, mask).edge_mask() == mask
