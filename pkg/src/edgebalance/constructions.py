"""Subdivision, square replacement, Cartesian and lexicographic products.

Product vertex ``(a, b)`` gets the flat id ``a * |V(B)| + b``. Subdivision
keeps the original ids and gives the vertex on edge ``k`` the id
``|V| + k``; square replacement gives edge ``k`` the two ids
``|V| + 2k`` and ``|V| + 2k + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DisconnectedBaseGraph, DisconnectedFactor, DisconnectedGraph, EmptyEdgeSet
from .graph import Edge, Graph, build_graph


@dataclass(frozen=True)
class ProductVertexMap:
    """Bijection between pairs ``(a, b)`` and flat product ids."""

    left_order: int
    right_order: int

    def flat(self, a: int, b: int) -> int:
        return a * self.right_order + b

    def pair(self, x: int) -> tuple[int, int]:
        return divmod(x, self.right_order)

    def __len__(self) -> int:
        return self.left_order * self.right_order


@dataclass(frozen=True)
class TransformVertexMap:
    """Source edge of every vertex added by subdivision or square replacement."""

    original_order: int
    per_edge: int

    def source_edge(self, x: int) -> int | None:
        """Index of the source edge, or ``None`` for an original vertex."""
        if x < self.original_order:
            return None
        return (x - self.original_order) // self.per_edge


def _needs_edges(a: Graph) -> None:
    if not a.connected:
        raise DisconnectedGraph("construction requires a connected graph")
    if a.edge_count == 0:
        raise EmptyEdgeSet("construction requires at least one edge")


def subdivision(a: Graph) -> Graph:
    _needs_edges(a)
    n = a.vertex_count
    edges = []
    for k, (u, v) in enumerate(a.edges):
        edges.append((u, n + k))
        edges.append((v, n + k))
    return build_graph(n + a.edge_count, edges)


def square_replacement(a: Graph) -> Graph:
    _needs_edges(a)
    n = a.vertex_count
    edges = []
    for k, (u, v) in enumerate(a.edges):
        for x in (n + 2 * k, n + 2 * k + 1):
            edges.append((u, x))
            edges.append((v, x))
    return build_graph(n + 2 * a.edge_count, edges)


def subdivision_map(a: Graph) -> TransformVertexMap:
    return TransformVertexMap(a.vertex_count, 1)


def square_replacement_map(a: Graph) -> TransformVertexMap:
    return TransformVertexMap(a.vertex_count, 2)


def product_map(a: Graph, b: Graph) -> ProductVertexMap:
    return ProductVertexMap(a.vertex_count, b.vertex_count)


def cartesian_product(a: Graph, b: Graph) -> Graph:
    if not (a.connected and b.connected):
        raise DisconnectedFactor("both Cartesian factors must be connected")
    pm = product_map(a, b)
    edges: list[Edge] = []
    for x in range(a.vertex_count):
        for y1, y2 in b.edges:
            edges.append((pm.flat(x, y1), pm.flat(x, y2)))
    for x1, x2 in a.edges:
        for y in range(b.vertex_count):
            edges.append((pm.flat(x1, y), pm.flat(x2, y)))
    return build_graph(len(pm), edges)


def lexicographic_product(a: Graph, b: Graph) -> Graph:
    """``A[B]``: ``B`` may be disconnected, in particular edgeless."""
    if not a.connected or a.edge_count == 0:
        raise DisconnectedBaseGraph("the first factor must be connected with at least one edge")
    pm = product_map(a, b)
    nb = b.vertex_count
    edges: list[Edge] = []
    for x1, x2 in a.edges:
        for y1 in range(nb):
            for y2 in range(nb):
                edges.append((pm.flat(x1, y1), pm.flat(x2, y2)))
    for x in range(a.vertex_count):
        for y1, y2 in b.edges:
            edges.append((pm.flat(x, y1), pm.flat(x, y2)))
    return build_graph(len(pm), edges)
