from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from outerfan.circular import (
    EdgeClass,
    canonicalize,
    check_outer_fan_planar,
    chords_cross,
    classify_edge,
    crossing_lists,
    drawing_key,
    format_order,
    parse_order,
    render_svg,
)
from outerfan.errors import GraphInputError
from outerfan.graph import build_graph, complete_graph, complete_two_hop_graph, cycle_graph


class TestClassify:
    def test_outer(self):
        assert classify_edge(tuple(range(6)), (0, 1)) is EdgeClass.OUTER

    def test_two_hop(self):
        assert classify_edge(tuple(range(6)), (0, 2)) is EdgeClass.TWO_HOP

    def test_long(self):
        assert classify_edge(tuple(range(6)), (0, 3)) is EdgeClass.LONG

    def test_wraparound(self):
        assert classify_edge(tuple(range(6)), (0, 5)) is EdgeClass.OUTER
        assert classify_edge(tuple(range(6)), (0, 4)) is EdgeClass.TWO_HOP

    def test_triangle_all_outer(self):
        for e in [(0, 1), (1, 2), (0, 2)]:
            assert classify_edge((0, 1, 2), e) is EdgeClass.OUTER

    def test_missing_endpoint(self):
        with pytest.raises(GraphInputError):
            classify_edge((0, 1, 2), (0, 5))


class TestChordsCross:
    def test_interleaved(self):
        assert chords_cross((0, 1, 2, 3), (0, 2), (1, 3))

    def test_nested(self):
        assert not chords_cross((0, 1, 2, 3), (0, 1), (2, 3))

    def test_shared_endpoint(self):
        assert not chords_cross((0, 1, 2, 3, 4), (0, 2), (2, 4))


class TestFanCheck:
    def test_k5_accepts(self):
        report = check_outer_fan_planar(complete_graph(5), (0, 1, 2, 3, 4))
        assert report.verdict
        assert report.crossings[(0, 2)] == ((1, 3), (1, 4))

    def test_k6_rejects(self):
        report = check_outer_fan_planar(complete_graph(6), tuple(range(6)))
        assert not report.verdict
        assert report.first_violation == (0, 3)
        assert (1, 4) in report.crossings[(0, 3)]
        assert (2, 5) in report.crossings[(0, 3)]

    def test_complete_two_hop_six(self):
        g = complete_two_hop_graph(6)
        report = check_outer_fan_planar(g, tuple(range(6)))
        assert report.verdict
        for i in range(6):
            e = tuple(sorted((i, (i + 2) % 6)))
            crossers = set(report.crossings[e])
            expected = {
                tuple(sorted(((i - 1) % 6, (i + 1) % 6))),
                tuple(sorted(((i + 1) % 6, (i + 3) % 6))),
            }
            assert crossers == expected

    def test_common_vertex_incidence(self):
        report = check_outer_fan_planar(complete_graph(5), (0, 1, 2, 3, 4))
        for e, crossers in report.crossings.items():
            if len(crossers) < 2:
                continue
            common = set(crossers[0])
            for f in crossers[1:]:
                common &= set(f)
            assert common
            v = common.pop()
            assert all(v in f for f in report.crossings[e])


def test_exhaustive_five_vertex_reports_match_brute_force():
    # every 5-vertex graph, every canonical order: recompute crossing lists
    # from first principles (strict interleaving of positions)
    orders = [(0, *p) for p in permutations(range(1, 5)) if p[0] < p[-1]]
    assert len(orders) == 12
    pairs = list(combinations(range(5), 2))
    for mask in range(1 << 10):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        g = build_graph(5, edges)
        for order in orders:
            pos = {v: i for i, v in enumerate(order)}
            expected = {e: [] for e in g.edge_list()}
            for e, f in combinations(g.edge_list(), 2):
                if set(e) & set(f):
                    continue
                a, b = sorted((pos[e[0]], pos[e[1]]))
                c, d = sorted((pos[f[0]], pos[f[1]]))
                if a < c < b < d or c < a < d < b:
                    expected[e].append(f)
                    expected[f].append(e)
            got = crossing_lists(g, order)
            assert {e: sorted(v) for e, v in expected.items()} == got


class TestCanonicalize:
    def test_rotation(self):
        assert canonicalize((2, 3, 0, 1)) == (0, 1, 2, 3)

    def test_reflection(self):
        assert canonicalize((0, 3, 2, 1)) == (0, 1, 2, 3)

    def test_triangle(self):
        assert canonicalize((1, 0, 2)) == (0, 1, 2)


order_strategy = st.permutations(range(6)).map(tuple)


@settings(max_examples=200, deadline=None)
@given(order_strategy, st.integers(0, 5), st.booleans())
def test_canonicalize_invariant_under_symmetry(order, shift, flip):
    moved = order[shift:] + order[:shift]
    if flip:
        moved = tuple(reversed(moved))
    assert canonicalize(moved) == canonicalize(order)


@settings(max_examples=200, deadline=None)
@given(order_strategy)
def test_canonicalize_idempotent(order):
    c = canonicalize(order)
    assert canonicalize(c) == c


@settings(max_examples=150, deadline=None)
@given(order_strategy, st.integers(0, 5), st.booleans())
def test_chords_cross_symmetric_and_canonical_invariant(order, shift, flip):
    e1, e2 = (order[0], order[2]), (order[1], order[4])
    moved = order[shift:] + order[:shift]
    if flip:
        moved = tuple(reversed(moved))
    assert chords_cross(order, e1, e2) == chords_cross(order, e2, e1)
    assert chords_cross(order, e1, e2) == chords_cross(moved, e1, e2)


@settings(max_examples=100, deadline=None)
@given(order_strategy, st.integers(0, 5), st.booleans())
def test_verdict_invariant_under_symmetry(order, shift, flip):
    g = complete_two_hop_graph(6)
    moved = order[shift:] + order[:shift]
    if flip:
        moved = tuple(reversed(moved))
    a = check_outer_fan_planar(g, order).verdict
    b = check_outer_fan_planar(g, moved).verdict
    assert a == b


class TestDrawingKey:
    def test_k4_orders_same_drawing(self):
        g = complete_graph(4)
        keys = {drawing_key(g, o) for o in [(0, 1, 2, 3), (0, 1, 3, 2), (0, 2, 1, 3)]}
        assert len(keys) == 1

    def test_distinct_drawings_distinct_keys(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert drawing_key(g, (0, 1, 2, 3)) != drawing_key(g, (0, 1, 3, 2))


class TestOrderText:
    def test_round_trip(self):
        assert parse_order(format_order((0, 2, 1))) == (0, 2, 1)


class TestSvg:
    def test_k4_geometry(self):
        g = complete_graph(4)
        svg = render_svg(g, (0, 1, 2, 3))
        assert svg.count("<line") == 6
        assert svg.count('r="5"') == 4
        assert "crossings=1" in svg and "fan-planar=true" in svg

    def test_k5_spacing(self):
        import math
        import re

        svg = render_svg(complete_graph(5), (0, 1, 2, 3, 4))
        assert svg.count("<line") == 10
        pts = re.findall(r'<circle cx="([-\d.]+)" cy="([-\d.]+)" r="5"', svg)
        assert len(pts) == 5
        angles = sorted(
            math.atan2(256 - float(y), float(x) - 256) % (2 * math.pi) for x, y in pts
        )
        gaps = [angles[i + 1] - angles[i] for i in range(4)]
        for gap in gaps:
            # coordinates are emitted with two decimals, so allow that noise
            assert abs(gap - 2 * math.pi / 5) < 1e-3

    def test_c6_no_crossings(self):
        svg = render_svg(cycle_graph(6), tuple(range(6)))
        assert "crossings=0" in svg

    def test_deterministic_bytes(self):
        g = complete_graph(5)
        assert render_svg(g, (0, 1, 2, 3, 4)) == render_svg(g, (0, 1, 2, 3, 4))
