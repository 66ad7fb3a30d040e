"""Exhaustive and randomized equivalence sweeps of recognizer vs oracle.

The sweep is the package's trust anchor: every labeled biconnected graph up
to a size bound, plus seeded random biconnected graphs at larger sizes, is
fed to both the structural recognizer and the exhaustive oracle, and any
verdict or embedding-set disagreement is recorded.  Structural audits of the
accepted drawings (edge counts, consecutive 4-cliques, scissor closures) and
SPQR round-trips ride along on the same pass.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from . import oracle, spqr
from .circular import EdgeClass, classify_edge, drawing_key
from .graph import Edge, Graph, build_graph, is_biconnected
from .recognizer import RecognitionOutcome, recognize


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices (2^C(n,2) of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield build_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def all_biconnected_graphs(n: int) -> Iterator[Graph]:
    for g in all_graphs(n):
        if is_biconnected(g):
            yield g


def sample_biconnected(n: int, rng: random.Random) -> Graph:
    """One random biconnected graph, edge count uniform over the full range."""
    pairs = list(combinations(range(n), 2))
    while True:
        m = rng.randint(n, len(pairs))
        g = build_graph(n, rng.sample(pairs, m))
        if is_biconnected(g):
            return g


@dataclass
class AcceptedRecord:
    edges: tuple[Edge, ...]
    n: int
    m: int
    triconnected_path: bool
    path: str
    embeddings: tuple[tuple[int, ...], ...]
    max_live_drawings: int
    two_hop_candidates: int


@dataclass
class SweepResult:
    graphs_checked: int = 0
    accepted: list[AcceptedRecord] = field(default_factory=list)
    disagreements: list[dict] = field(default_factory=list)
    embedding_mismatches: list[dict] = field(default_factory=list)
    ofp_graphs: list[tuple[int, int]] = field(default_factory=list)  # (n, m)
    density_violations: list[dict] = field(default_factory=list)
    spqr_failures: list[dict] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.disagreements


def _check_one(
    g: Graph,
    result: SweepResult,
    compare_embeddings: bool,
    check_spqr: bool,
    check_density: bool,
) -> None:
    from .graph import is_triconnected

    result.graphs_checked += 1
    outcome: RecognitionOutcome = recognize(g)
    maximal = oracle.is_maximal_outer_fan_planar(g)
    if outcome.accepted != maximal:
        result.disagreements.append(
            {
                "edges": g.edge_list(),
                "n": g.n,
                "recognizer": outcome.verdict.value,
                "reason": outcome.reason,
                "oracle_maximal": maximal,
            }
        )
        return
    if check_density:
        order = oracle.outer_fan_planar_order(g)
        if order is not None:
            result.ofp_graphs.append((g.n, g.m))
            if g.n >= 4 and g.m > 5 * g.n - 10:
                result.density_violations.append({"edges": g.edge_list()})
    if outcome.accepted:
        if compare_embeddings:
            expected = oracle.enumerate_embeddings(g)
            if tuple(outcome.embeddings) != expected:
                result.embedding_mismatches.append(
                    {
                        "edges": g.edge_list(),
                        "recognizer": outcome.embeddings,
                        "oracle": expected,
                    }
                )
        result.accepted.append(
            AcceptedRecord(
                edges=tuple(g.edge_list()),
                n=g.n,
                m=g.m,
                triconnected_path=is_triconnected(g),
                path=outcome.path,
                embeddings=tuple(outcome.embeddings),
                max_live_drawings=outcome.max_live_drawings,
                two_hop_candidates=outcome.two_hop_candidates,
            )
        )
    if check_spqr:
        tree = spqr.build_spqr(g)
        issues = spqr.verify_tree(tree, g)
        if issues:
            result.spqr_failures.append({"edges": g.edge_list(), "issues": issues})


def run_exhaustive_sweep(
    max_n: int = 6,
    compare_embeddings: bool = True,
    check_spqr: bool = True,
) -> SweepResult:
    """All labeled biconnected graphs with 3 <= n <= max_n."""
    result = SweepResult()
    for n in range(3, max_n + 1):
        for g in all_biconnected_graphs(n):
            _check_one(g, result, compare_embeddings, check_spqr, check_density=True)
    return result


def run_random_sweep(
    sizes: tuple[int, ...] = (7, 8),
    samples_per_size: int = 10_000,
    seed: int = 0,
    compare_embeddings: bool = False,
    check_spqr: bool = True,
) -> SweepResult:
    """Seeded random biconnected graphs at each size."""
    result = SweepResult()
    for n in sizes:
        rng = random.Random(seed * 1_000_003 + n)
        for _ in range(samples_per_size):
            g = sample_biconnected(n, rng)
            _check_one(g, result, compare_embeddings, check_spqr, check_density=True)
    return result


# ---------------------------------------------------------------------------
# Structural audits over accepted drawings
# ---------------------------------------------------------------------------


def audit_accepted(records: list[AcceptedRecord]) -> list[dict]:
    """Check the structural facts every accepted drawing must satisfy.

    The facts hold for 3-connected graphs with at least six vertices, so the
    audit is scoped to those: crossing long-edge pairs have two consecutive
    endpoints; scissors induce 4-cliques; a 4-clique containing a degree-3
    vertex occupies four consecutive positions with the degree-3 vertex
    strictly inside the run.  Violations are returned.
    """
    violations: list[dict] = []
    for rec in records:
        if rec.n < 6 or not rec.triconnected_path:
            continue
        g = build_graph(rec.n, rec.edges)
        for order in rec.embeddings:
            violations.extend(_audit_order(g, order))
    return violations


def _cyclic_consecutive(order: tuple[int, ...], vs: set[int]) -> int | None:
    """Start position of a consecutive run equal to vs, else None."""
    n = len(order)
    pos = {v: i for i, v in enumerate(order)}
    ps = {pos[v] for v in vs}
    for r in range(n):
        if {(r + k) % n for k in range(len(vs))} == ps:
            return r
    return None


def _audit_order(g: Graph, order: tuple[int, ...]) -> list[dict]:
    from .circular import chords_cross
    from .recognizer import k4_subsets

    issues: list[dict] = []
    n = len(order)
    pos = {v: i for i, v in enumerate(order)}
    edges = g.edge_list()
    long_edges = [e for e in edges if classify_edge(order, e) is EdgeClass.LONG]
    for e1, e2 in combinations(long_edges, 2):
        if not chords_cross(order, e1, e2):
            continue
        endpoints = [*e1, *e2]
        consecutive_pairs = [
            (a, b)
            for a in e1
            for b in e2
            if (pos[a] - pos[b]) % n in (1, n - 1)
        ]
        if not consecutive_pairs:
            issues.append(
                {"kind": "crossing_long_pair_not_consecutive", "edges": (e1, e2)}
            )
            continue
        # scissor: with crossing chords at circle positions a < b < c < d,
        # the inner endpoints b,c are adjacent and the outer endpoints d,a
        # are adjacent around the wrap; then the four must induce a 4-clique
        a, b, c, d = sorted(pos[x] for x in endpoints)
        if b + 1 == c and (a + n - d) % n == 1:
            quad = endpoints
            if not all(g.has_edge(x, y) for x, y in combinations(quad, 2)):
                issues.append({"kind": "scissor_without_k4", "edges": (e1, e2)})
    for quad in k4_subsets(g):
        deg3 = [v for v in quad if g.degree(v) == 3]
        if not deg3:
            continue
        start = _cyclic_consecutive(order, set(quad))
        if start is None:
            issues.append({"kind": "degree3_k4_not_consecutive", "quad": quad})
            continue
        interior = {order[(start + 1) % n], order[(start + 2) % n]}
        for v in deg3:
            if v not in interior:
                issues.append({"kind": "degree3_vertex_at_run_end", "quad": quad, "v": v})
    return issues


def edge_count_violations(records: list[AcceptedRecord]) -> list[dict]:
    """Accepted 3-connected graphs must have exactly 2n or 3n-6 edges."""
    bad = []
    for rec in records:
        if rec.triconnected_path and rec.m not in (2 * rec.n, 3 * rec.n - 6):
            bad.append({"edges": rec.edges, "n": rec.n, "m": rec.m})
    return bad


def embedding_class_count(g: Graph, orders) -> int:
    return len({drawing_key(g, o) for o in orders})
