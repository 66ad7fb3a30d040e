"""Outer drawings as circular vertex orders.

Placing all vertices on a circle and drawing edges as straight chords makes
every crossing a purely combinatorial fact: two chords cross exactly when
their endpoints interleave around the circle.  An order is outer-fan-planar
when every edge that is crossed two or more times is crossed only by edges
sharing a common endpoint.  In convex position an edge's crossers can never
straddle both sides of it, so the common-endpoint test is the whole check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import GraphInputError
from .graph import Edge, Graph, norm_edge

CircularOrder = tuple[int, ...]


class EdgeClass(Enum):
    OUTER = "outer"
    TWO_HOP = "two_hop"
    LONG = "long"


def positions(order: CircularOrder) -> dict[int, int]:
    return {v: i for i, v in enumerate(order)}


def _require_permutation(order: CircularOrder, n: int) -> None:
    if len(order) != n or set(order) != set(range(n)):
        raise GraphInputError(f"order {order} is not a permutation of 0..{n - 1}")


def classify_edge(order: CircularOrder, edge: tuple[int, int]) -> EdgeClass:
    """Classify an edge by the cyclic distance of its endpoint positions."""
    pos = positions(order)
    u, v = edge
    if u not in pos or v not in pos:
        raise GraphInputError(f"edge endpoint missing from order: {edge}")
    n = len(order)
    d = (pos[u] - pos[v]) % n
    if d in (1, n - 1):
        return EdgeClass.OUTER
    if d in (2, n - 2):
        return EdgeClass.TWO_HOP
    return EdgeClass.LONG


def chords_cross(order: CircularOrder, e1: tuple[int, int], e2: tuple[int, int]) -> bool:
    """Whether straight chords e1 and e2 cross for this circular order.

    Edges sharing an endpoint never cross in a simple drawing.
    """
    a, b = e1
    c, d = e2
    if len({a, b, c, d}) < 4:
        return False
    pos = positions(order)
    lo, hi = sorted((pos[a], pos[b]))
    in_c = lo < pos[c] < hi
    in_d = lo < pos[d] < hi
    return in_c != in_d


@dataclass(frozen=True)
class CrossingReport:
    """Crossing lists per edge plus the fan-planarity verdict for one order."""

    verdict: bool
    crossings: dict[Edge, tuple[Edge, ...]]
    first_violation: Edge | None


def crossing_lists(g: Graph, order: CircularOrder) -> dict[Edge, list[Edge]]:
    """Pairwise crossing lists for all edges, each list sorted."""
    edges = g.edge_list()
    pos = positions(order)
    lists: dict[Edge, list[Edge]] = {e: [] for e in edges}
    spans = {}
    for e in edges:
        lo, hi = sorted((pos[e[0]], pos[e[1]]))
        spans[e] = (lo, hi)
    for i, e1 in enumerate(edges):
        lo, hi = spans[e1]
        for e2 in edges[i + 1 :]:
            a, b = e2
            if a in e1 or b in e1:
                continue
            if (lo < pos[a] < hi) != (lo < pos[b] < hi):
                lists[e1].append(e2)
                lists[e2].append(e1)
    for e in edges:
        lists[e].sort()
    return lists


def check_outer_fan_planar(g: Graph, order: CircularOrder) -> CrossingReport:
    """Fan-planarity check of a fixed circular order.

    Accepts iff for every edge crossed at least twice, the crossing edges all
    share a common endpoint.  Tangential crossings and crossers on both sides
    of an edge cannot occur in convex position, so nothing else is checked.
    """
    _require_permutation(order, g.n)
    lists = crossing_lists(g, order)
    verdict = True
    first_violation: Edge | None = None
    for e in g.edge_list():
        crossers = lists[e]
        if len(crossers) < 2:
            continue
        common = set(crossers[0])
        for f in crossers[1:]:
            common &= set(f)
            if not common:
                break
        if not common:
            verdict = False
            first_violation = e
            break
    return CrossingReport(
        verdict=verdict,
        crossings={e: tuple(lst) for e, lst in lists.items()},
        first_violation=first_violation,
    )


def canonicalize(order: CircularOrder) -> CircularOrder:
    """Lexicographically least sequence among all rotations and reflections."""
    n = len(order)
    if n == 0:
        return ()
    seqs = [order, tuple(reversed(order))]
    best = None
    for seq in seqs:
        for r in range(n):
            cand = seq[r:] + seq[:r]
            if best is None or cand < best:
                best = cand
    return best


def drawing_key(g: Graph, order: CircularOrder) -> tuple[Edge, ...]:
    """Canonical position graph of the drawing.

    Two orders get the same key exactly when one drawing is the other after
    relabeling the graph by one of its automorphisms, i.e. they are the same
    unlabeled drawing.  Used to deduplicate embedding sets.
    """
    pos = positions(order)
    n = len(order)
    pairs = [norm_edge(pos[u], pos[v]) for u, v in g.edges]
    best: tuple[Edge, ...] | None = None
    for flip in (False, True):
        for r in range(n):
            if flip:
                mapped = sorted(
                    norm_edge((r - a) % n, (r - b) % n) for a, b in pairs
                )
            else:
                mapped = sorted(
                    norm_edge((a - r) % n, (b - r) % n) for a, b in pairs
                )
            cand = tuple(mapped)
            if best is None or cand < best:
                best = cand
    return best if best is not None else ()


def format_order(order: CircularOrder) -> str:
    return " ".join(str(v) for v in order)


def parse_order(text: str) -> CircularOrder:
    try:
        return tuple(int(tok) for tok in text.split())
    except ValueError as exc:
        raise GraphInputError(f"bad circular order: {exc}") from None


# ---------------------------------------------------------------------------
# SVG rendering
# ---------------------------------------------------------------------------

_CANVAS = 512
_RADIUS = 210
_LABEL_RADIUS = 232


def _vertex_xy(i: int, n: int, radius: int = _RADIUS) -> tuple[float, float]:
    # order[0] at angle 90 degrees, subsequent vertices counterclockwise
    theta = math.pi / 2 + 2 * math.pi * i / n
    cx = cy = _CANVAS / 2
    return cx + radius * math.cos(theta), cy - radius * math.sin(theta)


def render_svg(g: Graph, order: CircularOrder) -> str:
    """Straight-line drawing of the order on a circle as an SVG document.

    Output bytes are deterministic for a fixed input.  The fan-planarity
    verdict of the order is annotated in the <title> element; any order is
    rendered, valid or not.
    """
    _require_permutation(order, g.n)
    n = g.n
    report = check_outer_fan_planar(g, order)
    crossing_count = sum(len(v) for v in report.crossings.values()) // 2
    xy = {v: _vertex_xy(i, n) for i, v in enumerate(order)}
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_CANVAS}" height="{_CANVAS}" viewBox="0 0 {_CANVAS} {_CANVAS}">',
        f"<title>outer drawing: n={n} m={g.m} crossings={crossing_count} "
        f"fan-planar={'true' if report.verdict else 'false'}</title>",
        f'<circle cx="{_CANVAS / 2:.2f}" cy="{_CANVAS / 2:.2f}" r="{_RADIUS}" '
        'fill="none" stroke="#dddddd" stroke-width="1"/>',
    ]
    for u, v in g.edge_list():
        x1, y1 = xy[u]
        x2, y2 = xy[v]
        lines.append(
            f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
            'stroke="#333333" stroke-width="1.5"/>'
        )
    for i, v in enumerate(order):
        x, y = xy[v]
        lx, ly = _vertex_xy(i, n, _LABEL_RADIUS)
        lines.append(
            f'<circle cx="{x:.2f}" cy="{y:.2f}" r="5" fill="#1f6feb"/>'
        )
        lines.append(
            f'<text x="{lx:.2f}" y="{ly:.2f}" font-size="14" '
            f'font-family="monospace" text-anchor="middle" '
            f'dominant-baseline="middle">{v}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
