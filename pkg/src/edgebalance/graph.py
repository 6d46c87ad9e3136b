"""Canonical simple graphs, hop-distance tables and the standard families.

Vertices are dense integers ``0..n-1``. A :class:`Graph` is immutable and
always stored in canonical form: every edge is ``(u, v)`` with ``u < v`` and
the edge tuple is sorted, so two graphs with the same edge set compare (and
serialize) identically.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    DisconnectedGraph,
    DuplicateEdge,
    EdgeNotFound,
    InvalidParameter,
    SelfLoop,
    VertexOutOfRange,
)

Edge = tuple[int, int]


class Graph:
    """Immutable simple undirected graph in canonical form.

    Build instances through :func:`build_graph` or :func:`generate`; the
    constructor trusts its input.
    """

    __slots__ = ("_n", "_edges", "_adjacency", "_connected", "_index", "_hash")

    def __init__(self, vertex_count: int, edges: tuple[Edge, ...]):
        self._n = vertex_count
        self._edges = edges
        adj: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adj)
        self._index = {e: k for k, e in enumerate(edges)}
        self._connected = _is_connected(self._adjacency)
        self._hash = hash((vertex_count, edges))

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adjacency

    @property
    def connected(self) -> bool:
        return self._connected

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._index

    def edge_index(self, u: int, v: int) -> int:
        """Position of edge ``{u, v}`` in the canonical edge list."""
        try:
            return self._index[(min(u, v), max(u, v))]
        except KeyError:
            raise EdgeNotFound(f"edge ({u}, {v}) is not in the graph") from None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(vertex_count={self._n}, edge_count={len(self._edges)})"


def _is_connected(adjacency: Sequence[Sequence[int]]) -> bool:
    n = len(adjacency)
    if n <= 1:
        return True
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in adjacency[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n


def build_graph(vertex_count: int, edge_pairs: Iterable[Sequence[int]]) -> Graph:
    """Validate ``edge_pairs`` and return the canonical graph.

    Disconnected input is accepted; the ``connected`` flag records it and
    the analysis functions refuse such graphs.
    """
    if vertex_count < 0:
        raise InvalidParameter("vertex_count must be non-negative")
    seen: set[Edge] = set()
    for pair in edge_pairs:
        u, v = (int(x) for x in pair)
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        for x in (u, v):
            if not 0 <= x < vertex_count:
                raise VertexOutOfRange(f"vertex {x} outside 0..{vertex_count - 1}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdge(f"edge {e} listed twice")
        seen.add(e)
    return Graph(vertex_count, tuple(sorted(seen)))


# ---------------------------------------------------------------- families

FAMILIES = ("complete_bipartite", "complete", "cycle", "path", "empty")


@dataclass(frozen=True)
class FamilySpec:
    """A named parametric family, e.g. ``FamilySpec("complete_bipartite", (2, 3))``."""

    family: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidParameter(f"unknown family {self.family!r}")
        arity = 2 if self.family == "complete_bipartite" else 1
        if len(self.params) != arity:
            raise InvalidParameter(f"{self.family} takes {arity} parameter(s)")
        if any(int(p) < 1 for p in self.params):
            raise InvalidParameter("family parameters must be >= 1")
        if self.family == "cycle" and self.params[0] < 3:
            raise InvalidParameter("cycle requires k >= 3")

    @property
    def label(self) -> str:
        return f"{self.family}({','.join(str(p) for p in self.params)})"


def generate(spec: FamilySpec) -> Graph:
    """Build the labeled member of a family.

    ``complete_bipartite(m, n)`` puts side X on ``0..m-1`` and side Y on
    ``m..m+n-1``; cycles and paths follow vertex order.
    """
    p = spec.params
    if spec.family == "complete_bipartite":
        m, n = p
        edges = [(x, m + y) for x in range(m) for y in range(n)]
        return build_graph(m + n, edges)
    k = p[0]
    if spec.family == "complete":
        return build_graph(k, [(u, v) for u in range(k) for v in range(u + 1, k)])
    if spec.family == "cycle":
        return build_graph(k, [(i, (i + 1) % k) for i in range(k)])
    if spec.family == "path":
        return build_graph(k, [(i, i + 1) for i in range(k - 1)])
    return build_graph(k, [])


def complete_bipartite(m: int, n: int) -> Graph:
    return generate(FamilySpec("complete_bipartite", (m, n)))


def complete(k: int) -> Graph:
    return generate(FamilySpec("complete", (k,)))


def cycle(k: int) -> Graph:
    return generate(FamilySpec("cycle", (k,)))


def path(k: int) -> Graph:
    return generate(FamilySpec("path", (k,)))


def empty(k: int) -> Graph:
    return generate(FamilySpec("empty", (k,)))


# ---------------------------------------------------------------- distances


class DistanceOracle:
    """All-pairs hop distances of a connected graph.

    ``dist`` is a read-only ``(n, n)`` integer array. ``vertex_edge`` holds
    the vertex-to-edge distance ``min(dist[v, u], dist[v, w])`` for every
    vertex ``v`` and edge ``(u, w)``, columns in canonical edge order.
    """

    __slots__ = ("graph", "dist", "vertex_edge")

    def __init__(self, graph: Graph, dist: np.ndarray):
        self.graph = graph
        dist.setflags(write=False)
        self.dist = dist
        if graph.edge_count:
            ends = np.asarray(graph.edges, dtype=np.intp)
            ve = np.minimum(dist[:, ends[:, 0]], dist[:, ends[:, 1]])
        else:
            ve = np.zeros((graph.vertex_count, 0), dtype=dist.dtype)
        ve.setflags(write=False)
        self.vertex_edge = ve

    def __call__(self, u: int, v: int) -> int:
        return int(self.dist[u, v])


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Single-source hop distances; ``-1`` marks unreachable vertices."""
    dist = [-1] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def _require_connected(g: Graph) -> None:
    if not g.connected:
        raise DisconnectedGraph("operation requires a connected graph")


@lru_cache(maxsize=256)
def all_pairs_distances(g: Graph) -> DistanceOracle:
    """Hop-count table from a breadth-first sweep run from every source at once.

    Row ``s`` of the frontier matrix is the BFS frontier of source ``s``; one
    sparse-free matrix product advances all sweeps by one level.
    """
    _require_connected(g)
    n = g.vertex_count
    adj = np.zeros((n, n), dtype=np.int32)
    if g.edge_count:
        ends = np.asarray(g.edges, dtype=np.intp)
        adj[ends[:, 0], ends[:, 1]] = 1
        adj[ends[:, 1], ends[:, 0]] = 1
    dist = np.full((n, n), -1, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    seen = np.eye(n, dtype=bool)
    frontier = seen.astype(np.int32)
    level = 0
    while frontier.any():
        level += 1
        reached = (frontier @ adj) > 0
        reached &= ~seen
        dist[reached] = level
        seen |= reached
        frontier = reached.astype(np.int32)
    return DistanceOracle(g, dist)


def diameter(o: DistanceOracle) -> int:
    return int(o.dist.max()) if o.dist.size else 0


def bipartition(g: Graph) -> Optional[tuple[int, ...]]:
    """Two-coloring with vertex 0 colored 0, or ``None`` if an odd cycle exists."""
    _require_connected(g)
    if g.vertex_count == 0:
        return ()
    color = [-1] * g.vertex_count
    color[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if color[w] < 0:
                color[w] = 1 - color[u]
                queue.append(w)
            elif color[w] == color[u]:
                return None
    return tuple(color)


def is_complete_bipartite(g: Graph) -> Optional[tuple[int, int]]:
    """Side sizes ``(m, n)`` with ``m <= n`` if ``g`` is some ``K_{m,n}``."""
    if not g.connected or g.edge_count == 0:
        return None
    coloring = bipartition(g)
    if coloring is None:
        return None
    m = coloring.count(0)
    n = g.vertex_count - m
    if g.edge_count != m * n:
        return None
    return (min(m, n), max(m, n))


def relabel(g: Graph, permutation: Sequence[int]) -> Graph:
    """Image of ``g`` under ``v -> permutation[v]``."""
    if sorted(permutation) != list(range(g.vertex_count)):
        raise InvalidParameter("not a permutation of the vertex set")
    return build_graph(g.vertex_count, [(permutation[u], permutation[v]) for u, v in g.edges])
