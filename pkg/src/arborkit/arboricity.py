"""Arboricity, exact fractional arboricity, and forest partitions.

fractional_arboricity maximizes |E(S)| / (|S| - 1) over vertex subsets with
at least two vertices, as an exact rational. The exact mode runs a
Dinkelbach-style iteration: lambda starts at the density of the whole vertex
set and each step solves max |E(S)| - lambda (|S| - 1) through an integer
min-cut (one flow per choice of a vertex whose membership is free, which
makes the "-1" in the denominator exact rather than approximate). Every step
either certifies that no subset beats lambda or produces a strictly denser
subset, so the candidate densities visited strictly increase and the loop
ends after at most the number of distinct densities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .flow import MaxFlow
from .graphs import Graph, check_edge_subset, components, edge_induced_subgraph
from .limits import FRAC_BRUTE_VERTICES_DEFAULT, check_gate
from .matroid import cycle_rank, matroid_partition
from .rationals import INFINITE, Infinite, ceil_value, is_infinite


@dataclass(frozen=True)
class PartitionResult:
    """Either k forests covering E, or an edge set T with |T| > k * r(T)."""

    forests: tuple[frozenset[int], ...] | None
    violation: frozenset[int] | None

    @property
    def ok(self) -> bool:
        return self.forests is not None


@dataclass(frozen=True)
class ArboricityResult:
    value: int | Infinite
    witness_vertices: frozenset[int]


@dataclass(frozen=True)
class FracArbResult:
    value: Fraction | Infinite
    witness_vertices: frozenset[int]


def partition_into_forests(graph: Graph, k: int) -> PartitionResult:
    """Partition all edges into k forests, or certify impossibility.

    Loops force failure for every k (a loop alone violates |T| > k * 0).
    k = 0 succeeds only on an edgeless graph.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    part, uncovered, violation = matroid_partition(graph, k, graph.full_edge_set())
    if uncovered:
        return PartitionResult(forests=None, violation=violation)
    return PartitionResult(forests=part.forest_sets(), violation=None)


def _edges_within(graph: Graph, vertices: set[int] | frozenset[int]) -> int:
    return sum(1 for u, v in graph.endpoints if u in vertices and v in vertices)


def _density(graph: Graph, vertices: Iterable[int]) -> Fraction:
    verts = frozenset(vertices)
    return Fraction(_edges_within(graph, verts), len(verts) - 1)


def _improving_subset(
    graph: Graph, lam: Fraction, stop_at_first: bool = False
) -> frozenset[int] | None:
    """A vertex set S, |S| >= 2, with |E(S)| - lam (|S| - 1) maximal and > 0.

    None when no subset has positive excess (so gamma_f <= lam). One min-cut
    is solved per "free" vertex; with the free vertex exempt from the
    per-vertex charge, the best source side realizes the |S| - 1 objective.
    """
    n, m = graph.vertex_count, graph.edge_count
    p, q = lam.numerator, lam.denominator
    big = q * m + p * n + 1
    best_excess = 0
    best: frozenset[int] | None = None
    for free in range(n):
        # nodes: 0 source, 1 sink, 2..2+m-1 edge nodes, 2+m..2+m+n-1 vertices
        net = MaxFlow(2 + m + n)
        for e, (u, v) in enumerate(graph.endpoints):
            net.add_edge(0, 2 + e, q)
            net.add_edge(2 + e, 2 + m + u, big)
            if v != u:
                net.add_edge(2 + e, 2 + m + v, big)
        for u in range(n):
            if u != free:
                net.add_edge(2 + m + u, 1, p)
        excess = q * m - net.max_flow(0, 1)
        if excess > best_excess:
            side = net.min_cut_source_side(0)
            subset = frozenset(u for u in range(n) if (2 + m + u) in side)
            got = frozenset(subset)
            if _edges_within(graph, got) > 0:
                best_excess = excess
                best = got
                if stop_at_first:
                    return best
    return best


def fractional_arboricity(graph: Graph, mode: str = "exact") -> FracArbResult:
    """max |E(S)| / (|S| - 1), exact. Edgeless gives 0; a loop gives INFINITE."""
    loops = graph.loop_edges()
    if loops:
        u, _ = graph.endpoints[loops[0]]
        return FracArbResult(value=INFINITE, witness_vertices=frozenset({u}))
    if graph.edge_count == 0:
        return FracArbResult(value=Fraction(0), witness_vertices=frozenset())
    if mode == "brute":
        return _frac_arboricity_brute(graph)
    if mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")
    n = graph.vertex_count
    lam = Fraction(graph.edge_count, n - 1)
    witness = frozenset(range(n))
    steps = 0
    while True:
        steps += 1
        if steps > (graph.edge_count + 1) * (n + 1):
            raise AssertionError("internal error: density iteration failed to terminate")
        subset = _improving_subset(graph, lam)
        if subset is None:
            return FracArbResult(value=lam, witness_vertices=witness)
        new_lam = _density(graph, subset)
        # candidate densities must strictly increase or the search is wrong
        assert new_lam > lam, "internal error: density did not improve"
        lam = new_lam
        witness = subset


def _frac_arboricity_brute(graph: Graph) -> FracArbResult:
    check_gate(graph.vertex_count, FRAC_BRUTE_VERTICES_DEFAULT, "fractional_arboricity brute force")
    n = graph.vertex_count
    incident_mask = [0] * n
    best = Fraction(0)
    best_set: frozenset[int] = frozenset()
    for mask in range(1 << n):
        size = mask.bit_count()
        if size < 2:
            continue
        verts = frozenset(i for i in range(n) if mask >> i & 1)
        inside = sum(
            1 for u, v in graph.endpoints if (mask >> u & 1) and (mask >> v & 1)
        )
        if inside == 0:
            continue
        dens = Fraction(inside, size - 1)
        if dens > best:
            best = dens
            best_set = verts
    if not best_set:
        # m >= 1 loop-free always yields a 2-vertex candidate, keep a guard
        raise AssertionError("internal error: no candidate subset found")
    return FracArbResult(value=best, witness_vertices=best_set)


def fractional_arboricity_at_most(graph: Graph, bound) -> bool:
    """Exact threshold test gamma_f(G) <= bound with a single density step."""
    if is_infinite(bound):
        return True
    bound = Fraction(bound)
    if graph.has_loop():
        return False
    if graph.edge_count == 0:
        return Fraction(0) <= bound
    if bound <= 0:
        return False
    return _improving_subset(graph, bound, stop_at_first=True) is None


def arboricity(graph: Graph) -> ArboricityResult:
    """Least k admitting a k-forest partition, with a density witness.

    The witness vertex set induces a subgraph whose ceil density equals the
    value. Edgeless graphs give 0; a loop gives INFINITE.
    """
    loops = graph.loop_edges()
    if loops:
        u, _ = graph.endpoints[loops[0]]
        return ArboricityResult(value=INFINITE, witness_vertices=frozenset({u}))
    if graph.edge_count == 0:
        return ArboricityResult(value=0, witness_vertices=frozenset())
    k = 1
    while not partition_into_forests(graph, k).ok:
        k += 1
        if k > graph.edge_count:
            raise AssertionError("internal error: arboricity search overran |E|")
    if k == 1:
        u, v = graph.endpoints[0]
        return ArboricityResult(value=1, witness_vertices=frozenset({u, v}))
    witness = _witness_from_violation(graph, k)
    return ArboricityResult(value=k, witness_vertices=witness)


def _witness_from_violation(graph: Graph, k: int) -> frozenset[int]:
    """Vertex set whose induced density has ceiling k, for k >= 2.

    The violating set at k - 1 has some component denser than k - 1; that
    component's density then has ceiling exactly k.
    """
    result = partition_into_forests(graph, k - 1)
    assert result.violation is not None
    sub = edge_induced_subgraph(graph, result.violation)
    comp_of: dict[int, int] = {}
    for idx, comp in enumerate(components(sub.graph)):
        for v in comp:
            comp_of[v] = idx
    edge_count: dict[int, int] = {}
    vert_count: dict[int, int] = {}
    for v_new in range(sub.graph.vertex_count):
        vert_count[comp_of[v_new]] = vert_count.get(comp_of[v_new], 0) + 1
    for u, v in sub.graph.endpoints:
        edge_count[comp_of[u]] = edge_count.get(comp_of[u], 0) + 1
    for idx, m_i in edge_count.items():
        n_i = vert_count[idx]
        if m_i > (k - 1) * (n_i - 1):
            return frozenset(
                sub.vertices[v_new]
                for v_new in range(sub.graph.vertex_count)
                if comp_of[v_new] == idx
            )
    raise AssertionError("internal error: violating set had no dense component")


def check_subgraph_bound(graph: Graph, subset: Iterable[int]) -> bool:
    """|X| <= gamma_f(G) * (n(X) - c(X)), exactly.

    Holds for every edge set X of G; exposed so reports can spot-check the
    density bound on arbitrary subgraphs. INFINITE gamma_f passes trivially.
    """
    edges = check_edge_subset(graph, subset)
    gf = fractional_arboricity(graph).value
    if is_infinite(gf):
        return True
    return len(edges) <= gf * cycle_rank(graph, edges)


def arboricity_matches_ceiling(graph: Graph) -> bool:
    """Convenience equality arb(G) == ceil(gamma_f(G)) for loop-free G."""
    frac = fractional_arboricity(graph).value
    arb = arboricity(graph).value
    return arb == ceil_value(frac)
