import random
from itertools import combinations

import pytest

from outerfan import oracle
from outerfan.circular import check_outer_fan_planar, classify_edge, EdgeClass
from outerfan.errors import SizeLimitError
from outerfan.graph import (
    build_graph,
    complete_graph,
    complete_two_hop_graph,
    cycle_graph,
    is_biconnected,
    path_graph,
)


class TestFirstOrder:
    def test_k5(self):
        assert oracle.outer_fan_planar_order(complete_graph(5)) == (0, 1, 2, 3, 4)

    def test_k6_absent(self):
        assert oracle.outer_fan_planar_order(complete_graph(6)) is None

    def test_c7_natural(self):
        assert oracle.outer_fan_planar_order(cycle_graph(7)) == tuple(range(7))

    def test_round_trip(self):
        for g in [complete_graph(5), cycle_graph(6), complete_two_hop_graph(7)]:
            order = oracle.outer_fan_planar_order(g)
            assert order is not None
            assert check_outer_fan_planar(g, order).verdict

    def test_size_cap(self):
        with pytest.raises(SizeLimitError):
            oracle.outer_fan_planar_order(cycle_graph(13))
        assert oracle.outer_fan_planar_order(cycle_graph(13), max_n=13) is not None


class TestEnumerate:
    def test_k4_single_drawing(self):
        # all three canonical orders of a 4-clique pass the check and are the
        # same drawing up to relabeling
        assert oracle.enumerate_embeddings_raw(complete_graph(4)) == (
            (0, 1, 2, 3),
            (0, 1, 3, 2),
            (0, 2, 1, 3),
        )
        assert oracle.enumerate_embeddings(complete_graph(4)) == ((0, 1, 2, 3),)

    def test_p4_multiple(self):
        got = oracle.enumerate_embeddings(path_graph(4))
        assert len(got) > 1

    def test_two_hop_seven(self):
        g = complete_two_hop_graph(7)
        got = oracle.enumerate_embeddings(g)
        assert got
        for order in got:
            # every vertex sits between two of its boundary-cycle neighbors
            n = len(order)
            for i, v in enumerate(order):
                left, right = order[(i - 1) % n], order[(i + 1) % n]
                assert g.has_edge(v, left) and g.has_edge(v, right)

    def test_octahedron_raw_orders(self):
        got = oracle.enumerate_embeddings_raw(complete_two_hop_graph(6))
        assert got == (
            (0, 1, 2, 3, 4, 5),
            (0, 1, 5, 3, 4, 2),
            (0, 2, 1, 3, 5, 4),
            (0, 4, 2, 3, 1, 5),
        )


class TestMaximal:
    def test_k5(self):
        assert oracle.is_maximal_outer_fan_planar(complete_graph(5))

    def test_c5_not(self):
        assert not oracle.is_maximal_outer_fan_planar(cycle_graph(5))

    def test_octahedron(self):
        g = complete_two_hop_graph(6)
        assert oracle.is_maximal_outer_fan_planar(g)
        # each missing antipodal chord kills outer-fan-planarity on its own
        for u, v in g.non_edges():
            extended = build_graph(6, list(g.edges) + [(u, v)])
            assert oracle.outer_fan_planar_order(extended) is None

    def test_maximal_implies_biconnected_exhaustive(self):
        for n in (3, 4, 5):
            pairs = list(combinations(range(n), 2))
            for mask in range(1 << len(pairs)):
                g = build_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
                if oracle.is_maximal_outer_fan_planar(g):
                    assert is_biconnected(g)


def test_monotonicity_under_edge_removal():
    rng = random.Random(5)
    pairs6 = list(combinations(range(6), 2))
    for _ in range(150):
        m = rng.randint(5, 13)
        g = build_graph(6, rng.sample(pairs6, m))
        if oracle.outer_fan_planar_order(g) is None:
            continue
        smaller = build_graph(6, list(g.edges)[1:])
        assert oracle.outer_fan_planar_order(smaller) is not None


def test_density_bound_on_accepted():
    rng = random.Random(6)
    pairs7 = list(combinations(range(7), 2))
    for _ in range(100):
        m = rng.randint(7, 21)
        g = build_graph(7, rng.sample(pairs7, m))
        if oracle.outer_fan_planar_order(g) is not None:
            assert g.m <= 5 * g.n - 10


def test_fast_paths_agree_with_readable_checker():
    # the bitmask scan, the vectorized scan and the quadratic checker must
    # agree order by order
    rng = random.Random(9)
    pairs = list(combinations(range(5), 2))
    for mask in range(1 << 10):
        g = build_graph(5, [p for i, p in enumerate(pairs) if mask >> i & 1])
        for order in oracle.candidate_orders(5):
            assert oracle.order_is_fan_planar(g, order) == check_outer_fan_planar(g, order).verdict
    for _ in range(60):
        n = rng.randint(6, 8)
        all_pairs = list(combinations(range(n), 2))
        m = rng.randint(n, min(len(all_pairs), 5 * n - 10))
        g = build_graph(n, rng.sample(all_pairs, m))
        via_numpy = set(oracle.enumerate_embeddings_raw(g))
        via_python = {
            order for order in oracle.candidate_orders(n) if oracle.order_is_fan_planar(g, order)
        }
        assert via_numpy == via_python


def test_enumerate_contains_only_valid_orders():
    g = complete_two_hop_graph(7)
    for order in oracle.enumerate_embeddings_raw(g):
        assert check_outer_fan_planar(g, order).verdict
        assert all(
            classify_edge(order, e) in (EdgeClass.OUTER, EdgeClass.TWO_HOP)
            for e in g.edge_list()
        )
