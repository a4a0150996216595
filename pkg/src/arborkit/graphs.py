"""Multigraph substrate shared by every other module.

Graphs are finite multigraphs with loops allowed. Vertices are 0-indexed and
dense; edge ids are dense 0..m-1 in construction order, and all certificates
elsewhere in the toolkit are reported in terms of these ids. Edge subsets are
plain frozensets of edge ids validated against their host graph.

File format (one graph per file):
    n m
    u v        (m lines, 0-indexed endpoints, edge id = line order)
Lines whose first non-space character is '#' are comments; blank lines are
ignored. A loop is written "v v".
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphFormatError(ValueError):
    """Malformed graph text; message carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    endpoints: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        for eid, (u, v) in enumerate(self.endpoints):
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge {eid} endpoint out of range")

    @property
    def edge_count(self) -> int:
        return len(self.endpoints)

    def edge_ids(self) -> range:
        return range(len(self.endpoints))

    def full_edge_set(self) -> frozenset[int]:
        return frozenset(range(len(self.endpoints)))

    def has_loop(self) -> bool:
        return any(u == v for u, v in self.endpoints)

    def loop_edges(self) -> list[int]:
        return [e for e, (u, v) in enumerate(self.endpoints) if u == v]

    def degrees(self) -> list[int]:
        """Degree per vertex; a loop contributes 2 at its endpoint."""
        deg = [0] * self.vertex_count
        for u, v in self.endpoints:
            deg[u] += 1
            deg[v] += 1
        return deg

    def incident(self, vertex: int) -> list[int]:
        return [e for e, (u, v) in enumerate(self.endpoints) if u == vertex or v == vertex]


@dataclass(frozen=True)
class GraphStats:
    """Summary of the subgraph induced by an edge subset."""

    n: int
    c: int
    min_degree: int
    is_matching: bool
    is_forest: bool


@dataclass(frozen=True)
class InducedSubgraph:
    """Edge-induced subgraph with dense relabeling.

    vertices[i] and edges[j] give the original vertex / edge id behind the
    new index, so certificates can be mapped back.
    """

    graph: Graph
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    stats: GraphStats


def check_edge_subset(graph: Graph, subset: Iterable[int]) -> frozenset[int]:
    out = frozenset(subset)
    for e in out:
        if not isinstance(e, int) or not (0 <= e < graph.edge_count):
            raise ValueError(f"edge id {e!r} not in 0..{graph.edge_count - 1}")
    return out


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self):
        self.parent: dict[int, int] = {}

    def add(self, x: int) -> None:
        if x not in self.parent:
            self.parent[x] = x

    def find(self, x: int) -> int:
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge and report whether the parts were distinct."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def graph_stats(graph: Graph, subset: Iterable[int]) -> GraphStats:
    """n, c, min degree, matching/forest flags of the edge-induced subgraph.

    min_degree is over the vertices the subset touches (0 for the empty
    subset). The empty subset counts as both a matching and a forest.
    """
    edges = check_edge_subset(graph, subset)
    uf = _UnionFind()
    deg: dict[int, int] = {}
    loops = False
    for e in edges:
        u, v = graph.endpoints[e]
        uf.add(u)
        uf.add(v)
        uf.union(u, v)
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
        if u == v:
            loops = True
    n = len(uf.parent)
    c = len({uf.find(x) for x in uf.parent})
    min_degree = min(deg.values()) if deg else 0
    is_matching = not loops and all(d <= 1 for d in deg.values())
    is_forest = len(edges) == n - c
    return GraphStats(n=n, c=c, min_degree=min_degree, is_matching=is_matching, is_forest=is_forest)


def is_matching(graph: Graph, subset: Iterable[int]) -> bool:
    return graph_stats(graph, subset).is_matching


def is_forest(graph: Graph, subset: Iterable[int]) -> bool:
    return graph_stats(graph, subset).is_forest


def edge_induced_subgraph(graph: Graph, subset: Iterable[int]) -> InducedSubgraph:
    edges = sorted(check_edge_subset(graph, subset))
    verts = sorted({x for e in edges for x in graph.endpoints[e]})
    index = {v: i for i, v in enumerate(verts)}
    endpoints = tuple((index[graph.endpoints[e][0]], index[graph.endpoints[e][1]]) for e in edges)
    sub = Graph(len(verts), endpoints)
    return InducedSubgraph(
        graph=sub,
        vertices=tuple(verts),
        edges=tuple(edges),
        stats=graph_stats(graph, edges),
    )


def line_graph(graph: Graph) -> Graph:
    """Line graph: one vertex per edge, adjacency = sharing an endpoint.

    Parallel edges are adjacent (they share two endpoints but give one line
    edge). A loop is adjacent to every other edge at its vertex and has no
    self-adjacency.
    """
    incident: list[list[int]] = [[] for _ in range(graph.vertex_count)]
    for e, (u, v) in enumerate(graph.endpoints):
        incident[u].append(e)
        if u != v:
            incident[v].append(e)
    pairs: set[tuple[int, int]] = set()
    for edges_at_v in incident:
        for i in range(len(edges_at_v)):
            for j in range(i + 1, len(edges_at_v)):
                a, b = edges_at_v[i], edges_at_v[j]
                pairs.add((a, b) if a < b else (b, a))
    return Graph(graph.edge_count, tuple(sorted(pairs)))


def components(graph: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, isolated vertices included."""
    seen = [False] * graph.vertex_count
    adj: list[list[int]] = [[] for _ in range(graph.vertex_count)]
    for u, v in graph.endpoints:
        adj[u].append(v)
        adj[v].append(u)
    out = []
    for start in range(graph.vertex_count):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        out.append(sorted(comp))
    return out


def _int_token(token: str, line_no: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"{what} is not an integer: {token!r}", line_no) from None


def parse_graph(text: str) -> Graph:
    """Parse the "n m" + edge-lines format. Errors carry line numbers."""
    header: tuple[int, int] | None = None
    header_line = 0
    edges: list[tuple[int, int]] = []
    last_line = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line = line_no
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if header is None:
            if len(tokens) != 2:
                raise GraphFormatError("header must be exactly 'n m'", line_no)
            n = _int_token(tokens[0], line_no, "vertex count")
            m = _int_token(tokens[1], line_no, "edge count")
            if n < 0 or m < 0:
                raise GraphFormatError("counts must be nonnegative", line_no)
            header = (n, m)
            header_line = line_no
            continue
        n, m = header
        if len(edges) >= m:
            raise GraphFormatError(f"more than the declared {m} edges", line_no)
        if len(tokens) != 2:
            raise GraphFormatError("edge line must be exactly 'u v'", line_no)
        u = _int_token(tokens[0], line_no, "endpoint")
        v = _int_token(tokens[1], line_no, "endpoint")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex index out of range 0..{n - 1}", line_no)
        edges.append((u, v))
    if header is None:
        raise GraphFormatError("missing 'n m' header", last_line + 1)
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(
            f"declared {m} edges but found {len(edges)}", max(last_line, header_line) + 1
        )
    return Graph(n, tuple(edges))


def serialize_graph(graph: Graph) -> str:
    lines = [f"{graph.vertex_count} {graph.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.endpoints)
    return "\n".join(lines) + "\n"
