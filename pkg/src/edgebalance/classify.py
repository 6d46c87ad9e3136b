"""Membership tests for the balance classes, with exact rational lambda.

Ratios are :class:`fractions.Fraction` values; nothing here touches floats.
A ratio ``max/min`` with ``min == 0 < max`` has no finite value and puts the
graph outside every quasi class (stars and paths land here).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

import numpy as np

from .errors import DiameterTooSmall, EmptyEdgeSet
from .graph import Graph, all_pairs_distances, bipartition, diameter
from .metrics import (
    DistancePartition,
    EdgeBalance,
    VertexBalance,
    edge_balances,
    edge_count_matrix,
    partition_tensor,
    vertex_balances,
    vertex_count_matrix,
)

ExactRatio = Fraction


def format_ratio(r: Fraction) -> str:
    """Lowest-terms ``"p/q"``; the denominator is written even when it is 1."""
    return f"{r.numerator}/{r.denominator}"


def parse_ratio(text: str) -> Fraction:
    return Fraction(text.strip())


def _analysable(g: Graph):
    o = all_pairs_distances(g)
    if g.edge_count == 0:
        raise EmptyEdgeSet("analysis needs at least one edge")
    return o


def pair_ratio(a: int, b: int) -> Optional[Fraction]:
    """``max/min`` of a count pair; ``1`` for ``(0, 0)``, ``None`` when unbounded."""
    hi, lo = max(a, b), min(a, b)
    if hi == lo:
        return Fraction(1)
    if lo == 0:
        return None
    return Fraction(hi, lo)


def _as_pairs(pairs) -> np.ndarray:
    arr = np.asarray(pairs if isinstance(pairs, np.ndarray) else list(pairs), dtype=np.int64)
    return arr.reshape(-1, 2)


def common_ratio(pairs: Iterable[tuple[int, int]] | np.ndarray) -> Optional[Fraction]:
    """Shared ratio ``> 1`` across all pairs, else ``None``.

    Ratios are compared by cross-multiplication so the whole check stays in
    integers.
    """
    arr = _as_pairs(pairs)
    if len(arr) == 0:
        return None
    hi, lo = arr.max(axis=1), arr.min(axis=1)
    if (lo == 0).any():
        return None
    if not (hi * lo[0] == hi[0] * lo).all():
        return None
    lam = Fraction(int(hi[0]), int(lo[0]))
    return lam if lam > 1 else None


def nice_params(pairs: Iterable[tuple[int, int]] | np.ndarray) -> Optional[tuple[Fraction, int]]:
    """``(lambda, gamma)`` when every pair is ``{lambda*gamma, gamma}`` for shared values."""
    arr = _as_pairs(pairs)
    lam = common_ratio(arr)
    if lam is None:
        return None
    smaller = arr.min(axis=1)
    if not (smaller == smaller[0]).all():
        return None
    return lam, int(smaller[0])


def _m_pairs(g: Graph) -> np.ndarray:
    return edge_count_matrix(_analysable(g))[:, :2]


def _n_pairs(g: Graph) -> np.ndarray:
    return vertex_count_matrix(_analysable(g))[:, :2]


def eqdb_lambda(g: Graph) -> Optional[Fraction]:
    return common_ratio(_m_pairs(g))


def qdb_lambda(g: Graph) -> Optional[Fraction]:
    return common_ratio(_n_pairs(g))


def is_edb(g: Graph) -> bool:
    m = _m_pairs(g)
    return bool((m[:, 0] == m[:, 1]).all())


def nedb_gamma(g: Graph) -> Optional[int]:
    m = _m_pairs(g)
    if (m == m[0, 0]).all():
        return int(m[0, 0])
    return None


def nqedb_params(g: Graph) -> Optional[tuple[Fraction, int]]:
    return nice_params(_m_pairs(g))


def nqdb_params(g: Graph) -> Optional[tuple[Fraction, int]]:
    return nice_params(_n_pairs(g))


def shells(cells: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per-edge level counts from a partition tensor.

    Column ``i - 1`` of the first array is ``|D(i-1, i)|`` (level-``i`` edges
    nearer the first endpoint), the second array is the mirror ``|D(i, i-1)|``.
    """
    near_first = np.diagonal(cells, offset=1, axis1=1, axis2=2)
    near_second = np.diagonal(cells, offset=-1, axis1=1, axis2=2)
    return near_first, near_second


def mirror_cells_balanced(p: DistancePartition) -> bool:
    return all(a == b for a, b in (p.shell(i) for i in range(1, p.max_level() + 1)))


def is_sedb(g: Graph) -> bool:
    a, b = shells(partition_tensor(_analysable(g)))
    return bool((a == b).all())


def shell_relation_holds(heavy: int, light: int, lam: Fraction) -> bool:
    """``heavy == lam * light + (lam - 1)``, exactly."""
    return heavy == lam * light + (lam - 1)


def sqedb_edge_lambda(p: DistancePartition, d: int) -> Optional[Fraction]:
    """Lambda for one edge, or ``None``.

    The orientation is picked per edge: lambda is solved from the level-1
    shell as ``(heavy + 1) / (light + 1)`` and must then satisfy the shell
    relation on every level ``1..d-1`` with the same heavy side.
    """
    near_g, near_h = p.shell(1)
    if near_g == near_h:
        return None
    heavy_is_g = near_g > near_h
    heavy, light = (near_g, near_h) if heavy_is_g else (near_h, near_g)
    lam = Fraction(heavy + 1, light + 1)
    for i in range(1, d):
        a, b = p.shell(i)
        hv, lt = (a, b) if heavy_is_g else (b, a)
        if not shell_relation_holds(hv, lt, lam):
            return None
    return lam


def _sqedb_from_tensor(cells: np.ndarray, d: int) -> Optional[Fraction]:
    # same rule as sqedb_edge_lambda, vectorized over edges:
    # heavy + 1 == lam * (light + 1) on every level 1..d-1
    a, b = shells(cells)
    a, b = a[:, : d - 1], b[:, : d - 1]
    if a.shape[1] < d - 1:
        pad = d - 1 - a.shape[1]
        a = np.pad(a, ((0, 0), (0, pad)))
        b = np.pad(b, ((0, 0), (0, pad)))
    swap = a[:, 0] < b[:, 0]
    heavy = np.where(swap[:, None], b, a) + 1
    light = np.where(swap[:, None], a, b) + 1
    if (heavy[:, 0] == light[:, 0]).any():
        return None
    h1, l1 = heavy[:, :1], light[:, :1]
    if not (heavy * l1 == h1 * light).all():
        return None
    if not (h1[:, 0] * l1[0, 0] == h1[0, 0] * l1[:, 0]).all():
        return None
    return Fraction(int(h1[0, 0]), int(l1[0, 0]))


def sqedb_lambda(g: Graph, strict: bool = False) -> Optional[Fraction]:
    """Shared per-edge shell lambda ``> 1``.

    Diameter below 2 leaves the shell range empty; the result is ``None``,
    or :class:`DiameterTooSmall` when ``strict``.
    """
    o = _analysable(g)
    d = diameter(o)
    if d < 2:
        if strict:
            raise DiameterTooSmall(f"diameter {d} < 2: no shells to constrain")
        return None
    return _sqedb_from_tensor(partition_tensor(o), d)


@dataclass(frozen=True)
class BalanceReport:
    vertices: int
    edges: int
    diameter: int
    bipartite: bool
    edge_table: tuple[tuple[EdgeBalance, VertexBalance], ...]
    edb: bool
    nedb_gamma: Optional[int]
    sedb: bool
    eqdb_lambda: Optional[Fraction]
    qdb_lambda: Optional[Fraction]
    nqedb: Optional[tuple[Fraction, int]]
    nqdb: Optional[tuple[Fraction, int]]
    sqedb_lambda: Optional[Fraction]
    szeged: int
    edge_szeged: int
    sqedb_note: str = ""


def classify(g: Graph) -> BalanceReport:
    """Evaluate every class on ``g`` from one distance table."""
    o = _analysable(g)
    d = diameter(o)
    ebs = edge_balances(o)
    vbs = vertex_balances(o)
    m_pairs = np.array([(b.m_g, b.m_h) for b in ebs], dtype=np.int64)
    n_pairs = np.array([(b.n_g, b.n_h) for b in vbs], dtype=np.int64)
    cells = partition_tensor(o)
    near_first, near_second = shells(cells)
    edb = bool((m_pairs[:, 0] == m_pairs[:, 1]).all())
    nedb = int(m_pairs[0, 0]) if edb and (m_pairs == m_pairs[0, 0]).all() else None
    if d < 2:
        sq = None
        note = f"diameter {d} < 2: shell range empty"
    else:
        sq = _sqedb_from_tensor(cells, d)
        note = ""
    return BalanceReport(
        vertices=g.vertex_count,
        edges=g.edge_count,
        diameter=d,
        bipartite=bipartition(g) is not None,
        edge_table=tuple(zip(ebs, vbs)),
        edb=edb,
        nedb_gamma=nedb,
        sedb=bool((near_first == near_second).all()),
        eqdb_lambda=common_ratio(m_pairs),
        qdb_lambda=common_ratio(n_pairs),
        nqedb=nice_params(m_pairs),
        nqdb=nice_params(n_pairs),
        sqedb_lambda=sq,
        szeged=int((n_pairs[:, 0] * n_pairs[:, 1]).sum()),
        edge_szeged=int((m_pairs[:, 0] * m_pairs[:, 1]).sum()),
        sqedb_note=note,
    )


def report_document(r: BalanceReport) -> dict:
    """JSON-ready mapping with fixed key order; rationals as ``"p/q"`` strings."""

    def lam(x):
        return None if x is None else {"lambda": format_ratio(x)}

    return {
        "vertices": r.vertices,
        "edges": r.edges,
        "diameter": r.diameter,
        "bipartite": r.bipartite,
        "szeged": r.szeged,
        "edge_szeged": r.edge_szeged,
        "classes": {
            "edb": r.edb,
            "nedb": None if r.nedb_gamma is None else {"gamma": r.nedb_gamma},
            "sedb": r.sedb,
            "eqdb": lam(r.eqdb_lambda),
            "qdb": lam(r.qdb_lambda),
            "nqedb": None if r.nqedb is None else {"lambda": format_ratio(r.nqedb[0]), "gamma_prime": r.nqedb[1]},
            "nqdb": None if r.nqdb is None else {"lambda": format_ratio(r.nqdb[0]), "gamma": r.nqdb[1]},
            "sqedb": lam(r.sqedb_lambda),
        },
        "edge_table": [
            {
                "edge": [e.g, e.h],
                "m_g": e.m_g,
                "m_h": e.m_h,
                "m_0": e.m_0,
                "n_g": v.n_g,
                "n_h": v.n_h,
                "n_0": v.n_0,
            }
            for e, v in r.edge_table
        ],
    }
