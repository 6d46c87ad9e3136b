"""Slow reference implementations used only to cross-check the package.

Nothing here imports the distance or counting code under test.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations

INF = float("inf")


def floyd_warshall(n: int, edges) -> list[list[float]]:
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        dk = d[k]
        for i in range(n):
            di = d[i]
            dik = di[k]
            if dik == INF:
                continue
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return d


def vertex_edge(d, v, e) -> float:
    return min(d[v][e[0]], d[v][e[1]])


def brute_edge_counts(n: int, edges, f) -> tuple[int, int, int]:
    """``(m_g, m_h, m_0)`` for ``f = (g, h)`` straight from the definition."""
    d = floyd_warshall(n, edges)
    g, h = f
    key = (min(f), max(f))
    mg = mh = m0 = 0
    for e in edges:
        if (min(e), max(e)) == key:
            continue
        a, b = vertex_edge(d, g, e), vertex_edge(d, h, e)
        if a < b:
            mg += 1
        elif b < a:
            mh += 1
        else:
            m0 += 1
    return mg, mh, m0


def brute_vertex_counts(n: int, edges, f) -> tuple[int, int, int]:
    d = floyd_warshall(n, edges)
    g, h = f
    ng = sum(1 for w in range(n) if d[w][g] < d[w][h])
    nh = sum(1 for w in range(n) if d[w][h] < d[w][g])
    return ng, nh, n - ng - nh


def brute_partition(n: int, edges, f) -> dict[tuple[int, int], int]:
    d = floyd_warshall(n, edges)
    g, h = f
    key = (min(f), max(f))
    c: Counter = Counter()
    for e in edges:
        if (min(e), max(e)) == key:
            continue
        c[(int(vertex_edge(d, g, e)), int(vertex_edge(d, h, e)))] += 1
    return dict(c)


def brute_eqdb(n: int, edges):
    """Shared ratio ``> 1`` of edge counts via Fraction set, or None."""
    ratios = set()
    for f in edges:
        a, b, _ = brute_edge_counts(n, edges, f)
        hi, lo = max(a, b), min(a, b)
        if lo == 0:
            return None
        ratios.add(Fraction(hi, lo))
    if len(ratios) != 1:
        return None
    lam = ratios.pop()
    return lam if lam > 1 else None


def has_odd_cycle(n: int, edges) -> bool:
    """Exhaustive search for an odd closed walk via parity-layered reachability."""
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    for s in range(n):
        seen = {(s, 0)}
        stack = [(s, 0)]
        while stack:
            v, p = stack.pop()
            for w in adj[v]:
                st = (w, 1 - p)
                if st not in seen:
                    seen.add(st)
                    stack.append(st)
        if (s, 1) in seen:
            return True
    return False


def kmn_edges(m: int, n: int):
    return [(i, m + j) for i in range(m) for j in range(n)]


def all_edge_pairs(n: int):
    return list(combinations(range(n), 2))
