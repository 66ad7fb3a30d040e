import random
from itertools import combinations

import pytest

from outerfan import oracle
from outerfan.circular import EdgeClass, classify_edge
from outerfan.errors import StructuralError
from outerfan.graph import (
    add_edge,
    build_graph,
    complete_graph,
    complete_two_hop_graph,
    cycle_graph,
    degree3_k4_vertices,
    is_triconnected,
    path_graph,
    remove_vertex,
)
from outerfan.recognizer import (
    Verdict,
    is_complete_2hop,
    is_porous,
    recognize,
    recognize_3connected,
    recognize_biconnected,
)


def remark6_graph():
    """Six vertices: a 5-clique missing one edge between a neighbor of the
    degree-3 vertex and a non-neighbor, plus that degree-3 vertex."""
    base = [e for e in complete_graph(5).edges if e != (0, 3)]
    return build_graph(6, base + [(5, 0), (5, 1), (5, 2)])


class TestCompleteTwoHop:
    def test_k5(self):
        got = is_complete_2hop(complete_graph(5))
        assert got is not None
        assert got.orders == ((0, 1, 2, 3, 4),)
        assert got.raw_candidates == 1

    def test_k4(self):
        got = is_complete_2hop(complete_graph(4))
        assert got is not None and got.orders == ((0, 1, 2, 3),)

    def test_octahedron(self):
        got = is_complete_2hop(complete_two_hop_graph(6))
        assert got is not None
        assert got.raw_candidates == 6
        assert got.orders == (
            (0, 1, 2, 3, 4, 5),
            (0, 1, 5, 3, 4, 2),
            (0, 2, 1, 3, 5, 4),
            (0, 4, 2, 3, 1, 5),
        )

    def test_seven(self):
        got = is_complete_2hop(complete_two_hop_graph(7))
        assert got is not None
        assert got.raw_candidates <= 6
        assert got.orders == oracle.enumerate_embeddings_raw(complete_two_hop_graph(7))

    def test_k5_minus_edge_absent(self):
        g = build_graph(5, [e for e in complete_graph(5).edges if e != (1, 3)])
        assert is_complete_2hop(g) is None

    def test_four_regular_but_not_two_hop(self):
        # 4-regular bipartite K_{4,4} minus a perfect matching is 3-regular;
        # use the 3-cube plus diagonals instead: degree test passes but the
        # cyclic growth must fail
        g = build_graph(
            8,
            [
                (0, 1), (1, 2), (2, 3), (3, 0),
                (4, 5), (5, 6), (6, 7), (7, 4),
                (0, 4), (1, 5), (2, 6), (3, 7),
                (0, 5), (1, 4), (2, 7), (3, 6),
            ],
        )
        assert all(g.degree(v) == 4 for v in range(8))
        assert is_complete_2hop(g) is None


class TestRecognizeNamedCases:
    def test_k5_single_embedding(self):
        out = recognize(complete_graph(5))
        assert out.accepted
        assert out.embeddings == ((0, 1, 2, 3, 4),)

    def test_triangle(self):
        out = recognize(cycle_graph(3))
        assert out.accepted and out.embeddings == ((0, 1, 2),)

    def test_k4(self):
        out = recognize(complete_graph(4))
        assert out.accepted and out.embeddings == ((0, 1, 2, 3),)

    def test_p3_not_biconnected(self):
        assert recognize(path_graph(3)).verdict is Verdict.REJECTED_NOT_BICONNECTED

    def test_c5_rejected(self):
        out = recognize(cycle_graph(5))
        assert out.verdict is Verdict.REJECTED_STRUCTURE
        assert not oracle.is_maximal_outer_fan_planar(cycle_graph(5))

    def test_remark6_family(self):
        g = remark6_graph()
        out = recognize(g)
        assert out.accepted
        assert oracle.is_maximal_outer_fan_planar(g)
        assert out.embeddings == oracle.enumerate_embeddings(g)

    def test_octahedron_plus_chord(self):
        g = add_edge(complete_two_hop_graph(6), 0, 3)
        out = recognize(g)
        assert not out.accepted
        assert not oracle.is_maximal_outer_fan_planar(g)

    def test_two_k4s_sharing_an_edge(self):
        k4a = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        k4b = [(0, 1), (0, 4), (0, 5), (1, 4), (1, 5), (4, 5)]
        g = build_graph(6, k4a + k4b)
        out = recognize(g)
        assert out.verdict is Verdict.REJECTED_STRUCTURE
        assert "porous" in out.reason or "addable" in out.reason
        assert not oracle.is_maximal_outer_fan_planar(g)

    def test_k4_minus_edge_rejected(self):
        g = build_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
        assert not recognize(g).accepted
        assert not oracle.is_maximal_outer_fan_planar(g)


class TestOuterRequired:
    def test_k4_each_edge_placeable_outside(self):
        g = complete_graph(4)
        for e in g.edge_list():
            out = recognize_3connected(g, {e})
            assert out.accepted
            for order in out.embeddings:
                assert classify_edge(order, e) is EdgeClass.OUTER

    def test_k4_three_edges_at_one_vertex_impossible(self):
        out = recognize_3connected(complete_graph(4), {(0, 1), (0, 2), (0, 3)})
        assert out.verdict is Verdict.REJECTED_NO_EMBEDDING

    def test_requires_triconnected(self):
        with pytest.raises(StructuralError):
            recognize_3connected(cycle_graph(5), set())

    def test_required_edge_must_exist(self):
        with pytest.raises(StructuralError):
            recognize_3connected(complete_two_hop_graph(6), {(0, 3)})

    def test_two_hop_graph_with_required_long_placement(self):
        g = complete_two_hop_graph(7)
        out = recognize_3connected(g, {(0, 1)})
        assert out.accepted
        for order in out.embeddings:
            assert classify_edge(order, (0, 1)) is EdgeClass.OUTER


class TestPorosity:
    def test_triangle_always_porous(self):
        g = cycle_graph(3)
        drawings = [(0, 1, 2)]
        for e in g.edge_list():
            for around in e:
                assert is_porous(g, drawings, e, around)

    def test_k4_outer_edges_porous(self):
        g = complete_graph(4)
        drawings = list(oracle.enumerate_embeddings_raw(g))
        order = drawings[0]
        for i in range(4):
            e = tuple(sorted((order[i], order[(i + 1) % 4])))
            for around in e:
                assert is_porous(g, drawings, e, around)

    def test_six_vertex_instance_facts(self):
        # reconstructed porosity instance: a maximal drawing where an outer
        # edge is porous around exactly one endpoint, checked via exhaustive
        # search on the extended graph
        g = remark6_graph()
        d = (0, 1, 4, 3, 2, 5)
        assert d in oracle.enumerate_embeddings_raw(g)
        assert is_porous(g, [d], (3, 4), around=4)
        assert not is_porous(g, [d], (3, 4), around=3)
        assert is_porous(g, [d], (2, 3), around=3)
        assert not is_porous(g, [d], (2, 3), around=2)
        assert not is_porous(g, [d], (0, 1), around=0)
        assert not is_porous(g, [d], (0, 1), around=1)

    def test_porous_implies_extended_graph_embeddable(self):
        g = remark6_graph()
        d = (0, 1, 4, 3, 2, 5)
        pos = {v: i for i, v in enumerate(d)}
        for e, around in [((3, 4), 4), ((2, 3), 3)]:
            other = e[1] if around == e[0] else e[0]
            i = pos[around]
            left, right = d[(i - 1) % 6], d[(i + 1) % 6]
            w = left if right == other else right
            ext = build_graph(7, list(g.edges) + [(6, w)])
            assert oracle.outer_fan_planar_order(ext) is not None

    def test_non_outer_edge_rejected(self):
        g = remark6_graph()
        with pytest.raises(StructuralError):
            is_porous(g, [(0, 1, 4, 3, 2, 5)], (0, 3), around=0)


class TestPeelSoundness:
    # an accepted 3-connected 7-vertex graph (from a seeded sweep), dense
    # enough that the peel runs for several rounds
    SEVEN = [
        (0, 2), (0, 3), (0, 6), (1, 2), (1, 4), (1, 5), (1, 6), (2, 3),
        (2, 4), (2, 5), (2, 6), (3, 4), (3, 6), (4, 5), (4, 6),
    ]

    def test_peel_preserves_triconnectivity_and_maximality(self):
        # replay the deterministic peel rule on an accepted graph:
        # intermediates stay 3-connected while they have at least four
        # vertices, and stay maximal while the pre-removal graph has more
        # than six (below that the maximality-preservation argument does not
        # apply: peeling a 6-vertex graph yields a 5-clique minus an edge)
        g = build_graph(7, self.SEVEN)
        assert recognize(g).accepted
        current = g
        while current.n > 3:
            candidates = degree3_k4_vertices(current)
            assert candidates
            v, _ = candidates[0]
            before = current.n
            current = remove_vertex(current, v)
            if current.n >= 4:
                assert is_triconnected(current)
            if before > 6:
                assert oracle.is_maximal_outer_fan_planar(current)
        assert current.m == 3

    def test_six_vertex_peel_leaves_near_clique(self):
        g = remark6_graph()
        v, _ = degree3_k4_vertices(g)[0]
        peeled = remove_vertex(g, v)
        # one edge short of a 5-clique, hence not maximal on its own
        assert peeled.n == 5 and peeled.m == 9
        assert not oracle.is_maximal_outer_fan_planar(peeled)


class TestEquivalenceMiniSweeps:
    def test_exhaustive_up_to_five(self):
        pairs = {n: list(combinations(range(n), 2)) for n in (3, 4, 5)}
        for n in (3, 4, 5):
            for mask in range(1 << len(pairs[n])):
                g = build_graph(n, [p for i, p in enumerate(pairs[n]) if mask >> i & 1])
                from outerfan.graph import is_biconnected

                if not is_biconnected(g):
                    continue
                out = recognize(g)
                assert out.accepted == oracle.is_maximal_outer_fan_planar(g), g.edge_list()
                if out.accepted:
                    assert out.embeddings == oracle.enumerate_embeddings(g)

    def test_sampled_six_and_seven(self):
        from outerfan.sweep import sample_biconnected

        rng = random.Random(42)
        for n, count in [(6, 250), (7, 120)]:
            for _ in range(count):
                g = sample_biconnected(n, rng)
                out = recognize(g)
                assert out.accepted == oracle.is_maximal_outer_fan_planar(g), g.edge_list()
                if out.accepted:
                    assert out.embeddings == oracle.enumerate_embeddings(g)
                    assert out.max_live_drawings <= 4
                    assert all(
                        g.m in (2 * g.n, 3 * g.n - 6)
                        for _ in [0]
                        if is_triconnected(g)
                    )


class TestOutcomeSerialization:
    def test_json_dict(self):
        out = recognize(complete_graph(5))
        d = out.to_json_dict()
        assert d["verdict"] == "accepted"
        assert d["embeddings"] == [[0, 1, 2, 3, 4]]
        assert isinstance(d["trace"], list)

    def test_biconnected_entry_point_matches_dispatch(self):
        g = build_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
        assert recognize_biconnected(g).verdict == recognize(g).verdict
