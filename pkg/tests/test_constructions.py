import networkx as nx
import numpy as np
import pytest

from edgebalance.classify import eqdb_lambda
from edgebalance.constructions import (
    ProductVertexMap,
    cartesian_product,
    lexicographic_product,
    product_map,
    square_replacement,
    square_replacement_map,
    subdivision,
    subdivision_map,
)
from edgebalance.errors import DisconnectedBaseGraph, DisconnectedFactor, DisconnectedGraph, EmptyEdgeSet
from edgebalance.graph import (
    all_pairs_distances,
    bipartition,
    build_graph,
    complete,
    complete_bipartite,
    cycle,
    empty,
    path,
)
from edgebalance.metrics import edge_balances, edge_count_matrix, vertex_count_matrix

from oracles import floyd_warshall

SMALL = [path(2), path(3), path(4), cycle(3), cycle(4), cycle(5), complete(4),
         complete_bipartite(1, 3), complete_bipartite(2, 3)]


def _iso(a, b) -> bool:
    return nx.is_isomorphic(nx.Graph(list(a.edges)), nx.Graph(list(b.edges))) and a.vertex_count == b.vertex_count


# ------------------------------------------------------------- transforms


def test_subdivision_examples():
    assert subdivision(complete(2)) == build_graph(3, [(0, 2), (1, 2)])
    assert _iso(subdivision(complete(2)), path(3))
    assert _iso(subdivision(cycle(3)), cycle(6))
    s = subdivision(complete_bipartite(3, 3))
    assert (s.vertex_count, s.edge_count) == (15, 18)


def test_square_replacement_examples():
    assert _iso(square_replacement(complete(2)), cycle(4))
    o = square_replacement(complete_bipartite(3, 3))
    assert (o.vertex_count, o.edge_count) == (24, 36)
    b = edge_balances(o)[0]
    assert (b.m_g, b.m_h, b.m_0) == (17, 9, 9)


def test_transform_ids():
    a = complete_bipartite(2, 2)
    s = subdivision(a)
    for k, (u, v) in enumerate(a.edges):
        x = a.vertex_count + k
        assert s.has_edge(u, x) and s.has_edge(v, x) and not s.has_edge(u, v)
        assert subdivision_map(a).source_edge(x) == k
    o = square_replacement(a)
    for k, (u, v) in enumerate(a.edges):
        for x in (a.vertex_count + 2 * k, a.vertex_count + 2 * k + 1):
            assert o.has_edge(u, x) and o.has_edge(v, x)
            assert square_replacement_map(a).source_edge(x) == k
        assert not o.has_edge(u, v)
    assert subdivision_map(a).source_edge(0) is None


def test_transform_counts_and_bipartite():
    for a in SMALL + [complete(k) for k in range(2, 7)]:
        s, o = subdivision(a), square_replacement(a)
        assert (s.vertex_count, s.edge_count) == (a.vertex_count + a.edge_count, 2 * a.edge_count)
        assert (o.vertex_count, o.edge_count) == (a.vertex_count + 2 * a.edge_count, 4 * a.edge_count)
        assert bipartition(s) is not None
        assert s.connected and o.connected


def test_transform_rejects():
    with pytest.raises(DisconnectedGraph):
        subdivision(build_graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(EmptyEdgeSet):
        square_replacement(empty(1))


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_subdivided_and_squared_kmm_counts(m):
    for b in edge_balances(subdivision(complete_bipartite(m, m))):
        assert (b.m_g, b.m_h, b.m_0) == (m * m - 1, 2 * m - 1, (m - 1) ** 2)
    for b in edge_balances(square_replacement(complete_bipartite(m, m))):
        assert (b.m_g, b.m_h, b.m_0) == (2 * m * m - 1, 4 * m - 3, 2 * m * m - 4 * m + 3)


# --------------------------------------------------------------- products


def test_product_map_bijective():
    pm = ProductVertexMap(3, 4)
    assert len(pm) == 12
    assert sorted(pm.flat(*pm.pair(x)) for x in range(12)) == list(range(12))
    assert pm.flat(2, 1) == 9


def test_cartesian_examples():
    assert _iso(cartesian_product(complete(2), complete(2)), cycle(4))
    ladder = cartesian_product(path(3), complete(2))
    assert (ladder.vertex_count, ladder.edge_count) == (6, 7)
    pm = product_map(path(3), complete(2))
    assert all_pairs_distances(ladder)(pm.flat(0, 0), pm.flat(2, 1)) == 3


def test_cartesian_matches_networkx():
    for a in SMALL[:5]:
        for b in SMALL[:5]:
            p = cartesian_product(a, b)
            ref = nx.cartesian_product(nx.Graph(list(a.edges)), nx.Graph(list(b.edges)))
            pm = product_map(a, b)
            mine = {tuple(sorted((pm.pair(u), pm.pair(v)))) for u, v in p.edges}
            theirs = {tuple(sorted(e)) for e in ref.edges}
            assert mine == theirs


def test_cartesian_distance_additivity():
    for a in SMALL:
        for b in SMALL:
            if a.vertex_count * b.vertex_count > 64:
                continue
            p = cartesian_product(a, b)
            da = all_pairs_distances(a).dist.astype(np.int64)
            db = all_pairs_distances(b).dist.astype(np.int64)
            n = p.vertex_count
            want = (da[:, None, :, None] + db[None, :, None, :]).reshape(n, n)
            assert all_pairs_distances(p).dist.tolist() == want.tolist()


def test_cartesian_rejects_disconnected():
    with pytest.raises(DisconnectedFactor):
        cartesian_product(path(2), empty(2))


def test_lexicographic_examples():
    assert _iso(lexicographic_product(complete(2), empty(2)), complete_bipartite(2, 2))
    g = lexicographic_product(path(3), empty(2))
    assert (g.vertex_count, g.edge_count) == (6, 8)


def test_lexicographic_matches_networkx():
    for a in SMALL[:4]:
        for b in [empty(1), empty(2), path(2), path(3), cycle(3)]:
            p = lexicographic_product(a, b)
            gb = nx.Graph()
            gb.add_nodes_from(range(b.vertex_count))
            gb.add_edges_from(b.edges)
            ref = nx.lexicographic_product(nx.Graph(list(a.edges)), gb)
            pm = product_map(a, b)
            mine = {tuple(sorted((pm.pair(u), pm.pair(v)))) for u, v in p.edges}
            assert mine == {tuple(sorted(e)) for e in ref.edges}


def test_lexicographic_distance_rule():
    # d((a1,b1),(a2,b2)) = d_A(a1,a2) if a1 != a2, else min(2, d_B(b1,b2))
    a, b = path(4), path(3)
    p = lexicographic_product(a, b)
    pm = product_map(a, b)
    dp = floyd_warshall(p.vertex_count, p.edges)
    da = floyd_warshall(a.vertex_count, a.edges)
    db = floyd_warshall(b.vertex_count, b.edges)
    for x in range(p.vertex_count):
        for y in range(p.vertex_count):
            (a1, b1), (a2, b2) = pm.pair(x), pm.pair(y)
            want = da[a1][a2] if a1 != a2 else (0 if b1 == b2 else min(2, db[b1][b2]))
            assert dp[x][y] == want


def test_lexicographic_accepts_empty_second_factor_only():
    assert lexicographic_product(path(3), empty(3)).connected
    with pytest.raises(DisconnectedBaseGraph):
        lexicographic_product(empty(2), path(2))
    with pytest.raises(DisconnectedBaseGraph):
        lexicographic_product(build_graph(4, [(0, 1), (2, 3)]), path(2))


def test_cartesian_edge_formula_spot_values():
    # ladder path(3) x K_2: edge ((a0,b0),(a1,b0)) has one edge nearer a0 side, four nearer a1 side
    p = cartesian_product(path(3), complete(2))
    pm = product_map(path(3), complete(2))
    u, v = pm.flat(0, 0), pm.flat(1, 0)
    row = edge_count_matrix(all_pairs_distances(p))[p.edge_index(u, v)]
    assert row.tolist()[:2] == [1, 4]
    sq = cartesian_product(complete(2), complete(2))
    for b in edge_balances(sq):
        assert (b.m_g, b.m_h, b.m_0) == (1, 1, 1)


def test_cartesian_edge_formula_exhaustive():
    for a in SMALL:
        for b in SMALL:
            if a.vertex_count * b.vertex_count > 64:
                continue
            p = cartesian_product(a, b)
            counts = edge_count_matrix(all_pairs_distances(p))
            ma, na = edge_count_matrix(all_pairs_distances(a)), vertex_count_matrix(all_pairs_distances(a))
            mb, nb_ = edge_count_matrix(all_pairs_distances(b)), vertex_count_matrix(all_pairs_distances(b))
            nb = b.vertex_count
            for k, (x, y) in enumerate(a.edges):
                for z in range(nb):
                    row = counts[p.edge_index(x * nb + z, y * nb + z)]
                    for side in (0, 1):
                        assert row[side] == ma[k, side] * b.vertex_count + na[k, side] * b.edge_count
            for k, (x, y) in enumerate(b.edges):
                for z in range(a.vertex_count):
                    row = counts[p.edge_index(z * nb + x, z * nb + y)]
                    for side in (0, 1):
                        assert row[side] == mb[k, side] * a.vertex_count + nb_[k, side] * a.edge_count


def test_lexicographic_base_multiplier_on_single_copy():
    # with one copy of B the product is A itself, so the multiplier identity is trivial
    for a in SMALL:
        p = lexicographic_product(a, empty(1))
        assert p == a
        assert eqdb_lambda(p) == eqdb_lambda(a)


def test_lexicographic_m_counts_with_two_copies():
    # path(3)[empty(2)]: the base edge (a0,a1) has m-counts (0, 1) in A,
    # but in the product the a0 side sees one edge, not 2 * 0
    a = path(3)
    p = lexicographic_product(a, empty(2))
    m_a = edge_count_matrix(all_pairs_distances(a))
    counts = edge_count_matrix(all_pairs_distances(p))
    assert m_a[0].tolist()[:2] == [0, 1]
    row = counts[p.edge_index(0, 2)].tolist()
    assert row == [1, 3, 3]
