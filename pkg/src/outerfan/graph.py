"""Simple undirected graphs over dense integer vertex ids.

Graphs are immutable values; derived graphs (vertex deletion, edge addition)
are new values.  The connectivity predicates are deliberately brute force:
we delete vertices or vertex pairs and re-check connectivity, which is
obviously correct and more than fast enough at the sizes this package works
with (recognition inputs are small, and fan-planar graphs are sparse anyway).

The on-disk format for graphs is a plain edge list: a header line ``n m``
followed by ``m`` lines ``u v`` with 0-based ids.  ``#`` starts a comment.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable

from .errors import GraphInputError, StructuralError

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    """Return the edge as an ordered pair (min, max)."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset[Edge]
    adj: tuple[frozenset[int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def non_edges(self) -> list[Edge]:
        return [
            (u, v)
            for u, v in combinations(range(self.n), 2)
            if (u, v) not in self.edges
        ]


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, collapsing duplicate edges and rejecting self-loops."""
    if n < 0:
        raise GraphInputError(f"vertex count must be non-negative, got {n}")
    edges: set[Edge] = set()
    for u, v in edge_list:
        if not (0 <= u < n) or not (0 <= v < n):
            raise GraphInputError(f"vertex id out of range [0,{n}): edge ({u},{v})")
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u}")
        edges.add(norm_edge(u, v))
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, frozenset(edges), tuple(frozenset(a) for a in adj))


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_two_hop_graph(n: int) -> Graph:
    """The n-cycle plus all its 2-hop chords (4-regular for n >= 5)."""
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, (i + 2) % n) for i in range(n)]
    return build_graph(n, edges)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    return build_graph(g.n, list(g.edges) + [(u, v)])


def remove_vertex(g: Graph, v: int) -> Graph:
    """Delete ``v`` and compact the remaining ids, preserving their order."""
    if not (0 <= v < g.n):
        raise GraphInputError(f"vertex id out of range: {v}")
    relabel = {}
    nxt = 0
    for w in range(g.n):
        if w != v:
            relabel[w] = nxt
            nxt += 1
    edges = [(relabel[a], relabel[b]) for a, b in g.edges if v not in (a, b)]
    return build_graph(g.n - 1, edges)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``keep``; returns it with the new-to-old id map."""
    old_ids = sorted(set(keep))
    relabel = {old: new for new, old in enumerate(old_ids)}
    edges = [
        (relabel[a], relabel[b])
        for a, b in g.edges
        if a in relabel and b in relabel
    ]
    return build_graph(len(old_ids), edges), old_ids


def _connected_without(g: Graph, removed: frozenset[int]) -> bool:
    remaining = [v for v in range(g.n) if v not in removed]
    if not remaining:
        return True
    seen = {remaining[0]}
    stack = [remaining[0]]
    while stack:
        x = stack.pop()
        for y in g.adj[x]:
            if y not in removed and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(remaining)


def is_connected(g: Graph) -> bool:
    return _connected_without(g, frozenset())


def cut_vertices(g: Graph) -> list[int]:
    """All vertices whose removal disconnects the graph (n >= 3)."""
    if g.n < 3 or not is_connected(g):
        return []
    return [v for v in range(g.n) if not _connected_without(g, frozenset({v}))]


def is_biconnected(g: Graph) -> bool:
    """Connected, at least three vertices, no cut vertex."""
    if g.n < 3:
        return False
    return is_connected(g) and not cut_vertices(g)


@dataclass(frozen=True)
class SeparationPair:
    """A vertex pair whose removal disconnects the graph."""

    u: int
    v: int


def separation_pairs(g: Graph) -> list[SeparationPair]:
    """All separation pairs, found by exhaustive pair removal."""
    if g.n < 4 or not is_connected(g):
        return []
    return [
        SeparationPair(u, v)
        for u, v in combinations(range(g.n), 2)
        if not _connected_without(g, frozenset({u, v}))
    ]


def is_triconnected(g: Graph) -> bool:
    """More than three vertices, biconnected, and no separation pair."""
    if g.n < 4:
        return False
    if not is_biconnected(g):
        return False
    return not separation_pairs(g)


def degree3_k4_vertices(g: Graph) -> list[tuple[int, tuple[int, int, int]]]:
    """Vertices of degree 3 whose three neighbors are pairwise adjacent.

    Returned sorted by vertex id, each with its sorted neighbor triple.
    """
    out = []
    for v in range(g.n):
        if g.degree(v) != 3:
            continue
        a, b, c = sorted(g.adj[v])
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c):
            out.append((v, (a, b, c)))
    return out


def require_biconnected(g: Graph) -> None:
    """Raise StructuralError naming a cut vertex or disconnection."""
    if g.n < 3:
        raise StructuralError(f"graph has {g.n} < 3 vertices")
    if not is_connected(g):
        raise StructuralError("graph is not connected")
    cuts = cut_vertices(g)
    if cuts:
        raise StructuralError(f"graph has a cut vertex: {cuts[0]}")


# ---------------------------------------------------------------------------
# Edge-list text format
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` / ``u v`` edge-list format; '#' starts a comment."""
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise GraphInputError("empty edge-list file")
    lineno, header = rows[0]
    if len(header) != 2:
        raise GraphInputError(f"line {lineno}: expected header 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise GraphInputError(f"line {lineno}: bad header: {exc}") from None
    if len(rows) - 1 != m:
        raise GraphInputError(
            f"header declares {m} edges but file has {len(rows) - 1} edge lines"
        )
    edges = []
    for lineno, fields in rows[1:]:
        if len(fields) != 2:
            raise GraphInputError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError as exc:
            raise GraphInputError(f"line {lineno}: bad edge: {exc}") from None
        if not (0 <= u < n) or not (0 <= v < n):
            raise GraphInputError(f"line {lineno}: vertex id out of range [0,{n})")
        if u == v:
            raise GraphInputError(f"line {lineno}: self-loop at {u}")
        edges.append((u, v))
    return build_graph(n, edges)


def load_graph(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edge_list()]
    return "\n".join(lines) + "\n"


def save_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(g), encoding="utf-8")
