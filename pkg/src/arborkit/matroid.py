"""Cycle-matroid layer: ranks, k-fold unions, duals, flats, circuits.

The cycle matroid of a multigraph has rank n(X) - c(X) on an edge set X
(vertices touched minus components of the edge-induced subgraph); a set is
independent exactly when it is a forest, loops are rank-0 dependent
singletons, and parallel edges are 2-element circuits.

The rank of X in the k-fold union (largest subset of X coverable by k
forests) is computed by the classic matroid-partition augmenting search: k
disjoint forests are grown one element at a time, and a new element e is
inserted by a breadth-first search over exchange moves. The element f can
push g out of forest j whenever g lies on the fundamental cycle of f in
forest j, so a shortest chain of pushes ending at a forest with room absorbs
e. When the search exhausts without reaching a slot, the set L of reached
elements satisfies r(L) = |F_j intersect L| for every j, which yields
|L| > k * r(L) with e uncovered, a certificate that L fits in no k forests.

A brute-force mode (minimum over T of |X - T| + k * r(T)) is kept as the
oracle the tests compare against; the augmenting route is the primary path.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Callable, Iterable

from .graphs import Graph, check_edge_subset, _UnionFind
from .limits import (
    DeskScaleExceeded,
    FLAT_ENUM_DEFAULT,
    UNION_BRUTE_DEFAULT,
    UNION_TABLE_HARD_CAP,
    check_gate,
)


class RankOracle:
    """A matroid presented by its rank function over ground set 0..size-1."""

    def __init__(self, ground_set_size: int, fn: Callable[[frozenset[int]], int]):
        self.ground_set_size = ground_set_size
        self._fn = fn
        self._cache: dict[frozenset[int], int] = {}

    def ground_set(self) -> frozenset[int]:
        return frozenset(range(self.ground_set_size))

    def rank(self, subset: Iterable[int]) -> int:
        key = frozenset(subset)
        for x in key:
            if not (0 <= x < self.ground_set_size):
                raise ValueError(f"element {x!r} outside ground set")
        got = self._cache.get(key)
        if got is None:
            got = self._fn(key)
            self._cache[key] = got
        return got


def cycle_rank(graph: Graph, subset: Iterable[int]) -> int:
    """n(X) - c(X): the size of any spanning forest of the subset."""
    edges = check_edge_subset(graph, subset)
    uf = _UnionFind()
    forest = 0
    for e in edges:
        u, v = graph.endpoints[e]
        uf.add(u)
        uf.add(v)
        if uf.union(u, v):
            forest += 1
    return forest


def cycle_matroid(graph: Graph) -> RankOracle:
    return RankOracle(graph.edge_count, lambda X: cycle_rank(graph, X))


class _ForestPartition:
    """k disjoint forests over edges of one graph, with augmenting insertion."""

    def __init__(self, graph: Graph, k: int):
        if k < 0:
            raise ValueError("k must be nonnegative")
        self.graph = graph
        self.k = k
        self.owner: dict[int, int] = {}
        self.adj: list[dict[int, list[tuple[int, int]]]] = [dict() for _ in range(k)]

    def covered(self) -> int:
        return len(self.owner)

    def forest_sets(self) -> tuple[frozenset[int], ...]:
        sets: list[set[int]] = [set() for _ in range(self.k)]
        for e, j in self.owner.items():
            sets[j].add(e)
        return tuple(frozenset(s) for s in sets)

    def snapshot(self):
        return (
            dict(self.owner),
            [{v: list(lst) for v, lst in forest.items()} for forest in self.adj],
        )

    def restore(self, snap) -> None:
        owner, adj = snap
        self.owner = dict(owner)
        self.adj = [{v: list(lst) for v, lst in forest.items()} for forest in adj]

    def _add(self, j: int, eid: int) -> None:
        u, v = self.graph.endpoints[eid]
        self.adj[j].setdefault(u, []).append((eid, v))
        if u != v:
            self.adj[j].setdefault(v, []).append((eid, u))
        self.owner[eid] = j

    def _remove(self, j: int, eid: int) -> None:
        u, v = self.graph.endpoints[eid]
        self.adj[j][u].remove((eid, v))
        if u != v:
            self.adj[j][v].remove((eid, u))
        del self.owner[eid]

    def _forest_path(self, j: int, source: int, target: int) -> list[int] | None:
        """Edge ids of the source->target path inside forest j, else None."""
        if source == target:
            return []
        via: dict[int, tuple[int, int] | None] = {source: None}
        queue = deque([source])
        forest = self.adj[j]
        while queue:
            x = queue.popleft()
            for eid, y in forest.get(x, ()):
                if y in via:
                    continue
                via[y] = (eid, x)
                if y == target:
                    path = []
                    cur = y
                    while via[cur] is not None:
                        eid2, prev = via[cur]
                        path.append(eid2)
                        cur = prev
                    return path
                queue.append(y)
        return None

    def _fundamental_circuit(self, j: int, eid: int) -> list[int] | None:
        """Exchange partners of eid in forest j; None when j + eid is a forest.

        For a loop the circuit is the loop itself, so there are no partners
        and the empty list is returned.
        """
        u, v = self.graph.endpoints[eid]
        if u == v:
            return []
        return self._forest_path(j, u, v)

    def try_insert(self, eid: int) -> tuple[bool, frozenset[int] | None]:
        """Cover eid, rearranging as needed.

        Returns (True, None) on success. On failure returns (False, L) where
        L is the reached label set; L always satisfies |L| > k * r(L).
        """
        parent: dict[int, int | None] = {eid: None}
        queue = deque([eid])
        while queue:
            f = queue.popleft()
            for j in range(self.k):
                circuit = self._fundamental_circuit(j, f)
                if circuit is None:
                    self._apply_chain(parent, f, j)
                    return True, None
                for g in circuit:
                    if g not in parent:
                        parent[g] = f
                        queue.append(g)
        return False, frozenset(parent)

    def _apply_chain(self, parent: dict[int, int | None], last: int, slot: int) -> None:
        chain = [last]
        while parent[chain[-1]] is not None:
            chain.append(parent[chain[-1]])
        # chain runs from the slot end back to the new element
        target = slot
        touched = {slot}
        for x in chain:
            prev = self.owner.get(x)
            if prev is not None:
                self._remove(prev, x)
                touched.add(prev)
            self._add(target, x)
            if prev is None:
                break
            target = prev
        for j in touched:
            self._assert_forest(j)

    def _assert_forest(self, j: int) -> None:
        # soundness check after every rearrangement; cheap at desk scale
        uf = _UnionFind()
        for e, owner in self.owner.items():
            if owner != j:
                continue
            u, v = self.graph.endpoints[e]
            uf.add(u)
            uf.add(v)
            if not uf.union(u, v):
                raise AssertionError(f"internal error: forest {j} acquired a cycle")


def matroid_partition(
    graph: Graph, k: int, subset: Iterable[int]
) -> tuple[_ForestPartition, frozenset[int], frozenset[int] | None]:
    """Grow k forests over the subset, element by element in id order.

    Returns (partition, uncovered, violation). uncovered are the elements no
    augmentation could place; violation is the label set of the last failure
    (None when everything fits).
    """
    edges = sorted(check_edge_subset(graph, subset))
    part = _ForestPartition(graph, k)
    uncovered = []
    violation = None
    for e in edges:
        ok, label = part.try_insert(e)
        if not ok:
            uncovered.append(e)
            violation = label
    return part, frozenset(uncovered), violation


def union_rank(graph: Graph, k: int, subset: Iterable[int], method: str = "augment") -> int:
    """Rank of the subset in the k-fold union of the cycle matroid."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    edges = check_edge_subset(graph, subset)
    if method == "augment":
        _, uncovered, _ = matroid_partition(graph, k, edges)
        return len(edges) - len(uncovered)
    if method == "brute":
        return _union_rank_brute(graph, k, edges)
    raise ValueError(f"unknown method {method!r}")


def _union_rank_brute(graph: Graph, k: int, edges: frozenset[int]) -> int:
    check_gate(len(edges), UNION_BRUTE_DEFAULT, "union_rank brute force")
    items = sorted(edges)
    size = len(items)
    ranks = {}
    best = size
    for mask in range(1 << size):
        members = [items[i] for i in range(size) if mask >> i & 1]
        ranks[mask] = cycle_rank(graph, members)
        value = (size - len(members)) + k * ranks[mask]
        if value < best:
            best = value
    return best


def union_oracle(graph: Graph, k: int) -> RankOracle:
    return RankOracle(graph.edge_count, lambda X: union_rank(graph, k, X))


def union_rank_table(graph: Graph, k: int) -> list[int]:
    """union_rank for every subset, indexed by edge bitmask.

    Each subset reuses the stored optimal partition of the subset without its
    lowest element and performs one augmenting insertion, so the whole table
    costs one augmentation per subset.
    """
    m = graph.edge_count
    if m > UNION_TABLE_HARD_CAP:
        raise DeskScaleExceeded(f"union_rank_table needs |E| <= {UNION_TABLE_HARD_CAP}, got {m}")
    ranks = [0] * (1 << m)
    owners: list[tuple[tuple[int, int], ...]] = [()] * (1 << m)
    for mask in range(1, 1 << m):
        low = mask & -mask
        e = low.bit_length() - 1
        prev = mask ^ low
        part = _ForestPartition(graph, k)
        for eid, j in owners[prev]:
            part._add(j, eid)
        ok, _ = part.try_insert(e)
        ranks[mask] = ranks[prev] + (1 if ok else 0)
        owners[mask] = tuple(sorted(part.owner.items()))
    return ranks


def dual_rank(base: RankOracle, subset: Iterable[int]) -> int:
    """|X| + r(E - X) - r(E) for the base matroid's rank function r."""
    ground = base.ground_set()
    key = frozenset(subset)
    return len(key) + base.rank(ground - key) - base.rank(ground)


def dual_oracle(base: RankOracle) -> RankOracle:
    return RankOracle(base.ground_set_size, lambda X: dual_rank(base, X))


def enumerate_flats(oracle: RankOracle, max_ground: int | None = None) -> list[frozenset[int]]:
    """All flats, by the subset scan: X is a flat iff every outside element
    raises the rank. Returned in canonical order (size, then sorted ids)."""
    size = oracle.ground_set_size
    limit = max_ground if max_ground is not None else FLAT_ENUM_DEFAULT
    if max_ground is None:
        check_gate(size, FLAT_ENUM_DEFAULT, "enumerate_flats")
    elif size > limit:
        raise DeskScaleExceeded(f"enumerate_flats: ground set {size} exceeds limit {limit}")
    flats = []
    for mask in range(1 << size):
        members = frozenset(i for i in range(size) if mask >> i & 1)
        base_rank = oracle.rank(members)
        if all(
            oracle.rank(members | {x}) == base_rank + 1
            for x in range(size)
            if x not in members
        ):
            flats.append(members)
    flats.sort(key=lambda f: (len(f), sorted(f)))
    return flats


def is_circuit(oracle: RankOracle, subset: Iterable[int]) -> bool:
    """Minimal dependent set test straight from the definition."""
    members = frozenset(subset)
    if not members:
        return False
    if oracle.rank(members) >= len(members):
        return False
    return all(oracle.rank(members - {x}) == len(members) - 1 for x in members)


def bases(oracle: RankOracle) -> list[frozenset[int]]:
    """All maximum-size independent sets; exhaustive, meant for small ground sets."""
    ground = sorted(oracle.ground_set())
    r = oracle.rank(ground)
    out = []
    for combo in combinations(ground, r):
        if oracle.rank(combo) == r:
            out.append(frozenset(combo))
    return out
