"""Edge-level distance counts: balance sets, distance partitions, Szeged indices.

For an edge ``f = gh`` every other edge ``f'`` is closer to ``g``, closer
to ``h`` or equidistant, where the distance from a vertex to an edge is the
distance to its nearer endpoint. ``f`` itself is in none of the three sets,
so ``m_g + m_h + m_0 == |E| - 1``.

Everything here is integer arithmetic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import EdgeNotFound
from .graph import DistanceOracle, Edge, Graph, all_pairs_distances


@dataclass(frozen=True)
class EdgeBalance:
    """Edge counts for ``f = (g, h)``; ``g`` is the endpoint with more edges."""

    g: int
    h: int
    m_g: int
    m_h: int
    m_0: int

    @property
    def edge(self) -> Edge:
        return (min(self.g, self.h), max(self.g, self.h))


@dataclass(frozen=True)
class VertexBalance:
    """Vertex counts for ``f = (g, h)``; each endpoint counts toward itself."""

    g: int
    h: int
    n_g: int
    n_h: int
    n_0: int

    @property
    def edge(self) -> Edge:
        return (min(self.g, self.h), max(self.g, self.h))


@dataclass(frozen=True)
class DistancePartition:
    """Cell sizes ``|D(i, j)|`` for edge ``(g, h)``.

    ``i`` is the distance of the other edge to ``g`` and ``j`` its distance
    to ``h``. Only non-empty cells are stored, sorted by ``(i, j)``.
    """

    g: int
    h: int
    cells: tuple[tuple[tuple[int, int], int], ...]

    def cell(self, i: int, j: int) -> int:
        for key, count in self.cells:
            if key == (i, j):
                return count
        return 0

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.cells)

    def total(self) -> int:
        return sum(c for _, c in self.cells)

    def shell(self, i: int) -> tuple[int, int]:
        """``(|D(i-1, i)|, |D(i, i-1)|)``: level-``i`` edges nearer ``g``, nearer ``h``."""
        return self.cell(i - 1, i), self.cell(i, i - 1)

    def max_level(self) -> int:
        return max((max(i, j) for (i, j), _ in self.cells), default=0)

    def balance(self) -> tuple[int, int, int]:
        """``(m_g, m_h, m_0)`` summed from the cells."""
        m_g = sum(c for (i, j), c in self.cells if i < j)
        m_h = sum(c for (i, j), c in self.cells if i > j)
        m_0 = sum(c for (i, j), c in self.cells if i == j)
        return m_g, m_h, m_0


def _oracle(x: Graph | DistanceOracle) -> DistanceOracle:
    return x if isinstance(x, DistanceOracle) else all_pairs_distances(x)


def vertex_to_edge_distance(o: DistanceOracle, v: int, f: Sequence[int]) -> int:
    return int(min(o.dist[v, f[0]], o.dist[v, f[1]]))


def edge_to_edge_distance(o: DistanceOracle, f: Sequence[int], f2: Sequence[int]) -> int:
    d = o.dist
    return int(min(d[f[0], f2[0]], d[f[0], f2[1]], d[f[1], f2[0]], d[f[1], f2[1]]))


def _check_edge(o: DistanceOracle, f: Sequence[int]) -> int:
    g, h = int(f[0]), int(f[1])
    n = o.graph.vertex_count
    if not (0 <= g < n and 0 <= h < n) or not o.graph.has_edge(g, h):
        raise EdgeNotFound(f"({g}, {h}) is not an edge")
    return o.graph.edge_index(g, h)


def _oriented(g: int, h: int, a: int, b: int, m_0: int) -> EdgeBalance:
    # heavier endpoint first; ties keep the lower vertex id as g
    if a > b or (a == b and g < h):
        return EdgeBalance(g, h, a, b, m_0)
    return EdgeBalance(h, g, b, a, m_0)


def edge_count_matrix(o: DistanceOracle) -> np.ndarray:
    """``(|E|, 3)`` array of ``(m_u, m_v, m_0)`` per canonical edge ``(u, v)``."""
    ve = o.vertex_edge
    ends = np.asarray(o.graph.edges, dtype=np.intp).reshape(-1, 2)
    du = ve[ends[:, 0]]
    dv = ve[ends[:, 1]]
    closer_u = (du < dv).sum(axis=1)
    closer_v = (dv < du).sum(axis=1)
    # the diagonal (f against itself) is always a tie and is removed here
    ties = (du == dv).sum(axis=1) - 1
    return np.stack([closer_u, closer_v, ties], axis=1)


def vertex_count_matrix(o: DistanceOracle) -> np.ndarray:
    """``(|E|, 3)`` array of ``(n_u, n_v, n_0)`` per canonical edge ``(u, v)``."""
    ends = np.asarray(o.graph.edges, dtype=np.intp).reshape(-1, 2)
    du = o.dist[ends[:, 0]]
    dv = o.dist[ends[:, 1]]
    return np.stack([(du < dv).sum(axis=1), (dv < du).sum(axis=1), (du == dv).sum(axis=1)], axis=1)


def edge_balance(o: DistanceOracle, f: Sequence[int]) -> EdgeBalance:
    k = _check_edge(o, f)
    u, v = o.graph.edges[k]
    ve = o.vertex_edge
    du, dv = ve[u], ve[v]
    m_u = int((du < dv).sum())
    m_v = int((dv < du).sum())
    m_0 = int((du == dv).sum()) - 1
    return _oriented(u, v, m_u, m_v, m_0)


def edge_balances(o: Graph | DistanceOracle) -> list[EdgeBalance]:
    """Canonically oriented balances of every edge, in canonical edge order."""
    o = _oracle(o)
    counts = edge_count_matrix(o).tolist()
    return [_oriented(u, v, a, b, z) for (u, v), (a, b, z) in zip(o.graph.edges, counts)]


def vertex_balance(o: DistanceOracle, f: Sequence[int]) -> VertexBalance:
    """Vertex counts with ``g = f[0]`` and ``h = f[1]`` as given."""
    _check_edge(o, f)
    g, h = int(f[0]), int(f[1])
    dg, dh = o.dist[g], o.dist[h]
    return VertexBalance(g, h, int((dg < dh).sum()), int((dh < dg).sum()), int((dg == dh).sum()))


def vertex_balances(o: Graph | DistanceOracle) -> list[VertexBalance]:
    """Vertex counts for every edge in the orientation of :func:`edge_balances`."""
    o = _oracle(o)
    return [vertex_balance(o, (b.g, b.h)) for b in edge_balances(o)]


def distance_partition(o: DistanceOracle, f: Sequence[int]) -> DistancePartition:
    """Cells of the distance partition of ``E - {f}`` with ``g = f[0]``.

    Walks the edge list directly against the distance table, independent of
    the vectorized path used by :func:`edge_balance`.
    """
    k = _check_edge(o, f)
    g, h = int(f[0]), int(f[1])
    d = o.dist
    counter: Counter[tuple[int, int]] = Counter()
    for idx, (a, b) in enumerate(o.graph.edges):
        if idx == k:
            continue
        i = min(int(d[g, a]), int(d[g, b]))
        j = min(int(d[h, a]), int(d[h, b]))
        counter[(i, j)] += 1
    return DistancePartition(g, h, tuple(sorted(counter.items())))


def partition_tensor(o: DistanceOracle) -> np.ndarray:
    """``cells[k, i, j]`` for every canonical edge ``k = (u, v)`` with ``g = u``.

    Vectorized counterpart of :func:`distance_partition`; the edge itself is
    removed from cell ``(0, 0)``.
    """
    e = o.graph.edge_count
    ve = o.vertex_edge
    levels = int(ve.max()) + 1 if ve.size else 1
    ends = np.asarray(o.graph.edges, dtype=np.intp).reshape(-1, 2)
    keys = ve[ends[:, 0]] * levels + ve[ends[:, 1]]
    keys += (np.arange(e) * levels * levels)[:, None]
    cells = np.bincount(keys.ravel(), minlength=e * levels * levels).reshape(e, levels, levels)
    cells[np.arange(e), 0, 0] -= 1
    return cells


def partitions(o: Graph | DistanceOracle) -> list[DistancePartition]:
    """Partitions for every edge, oriented as in :func:`edge_balances`."""
    o = _oracle(o)
    cells = partition_tensor(o)
    out = []
    for k, b in enumerate(edge_balances(o)):
        c = cells[k] if b.g < b.h else cells[k].T
        nz = np.argwhere(c)
        out.append(DistancePartition(b.g, b.h, tuple(((int(i), int(j)), int(c[i, j])) for i, j in nz)))
    return out


def szeged_index(g: Graph) -> int:
    counts = vertex_count_matrix(all_pairs_distances(g))
    return int((counts[:, 0] * counts[:, 1]).sum())


def edge_szeged_index(g: Graph) -> int:
    counts = edge_count_matrix(all_pairs_distances(g))
    return int((counts[:, 0] * counts[:, 1]).sum())
