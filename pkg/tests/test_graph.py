import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from edgebalance.errors import (
    DisconnectedGraph,
    DuplicateEdge,
    EdgeNotFound,
    InvalidParameter,
    ParseError,
    SelfLoop,
    VertexOutOfRange,
)
from edgebalance.graph import (
    FamilySpec,
    all_pairs_distances,
    bfs_distances,
    bipartition,
    build_graph,
    complete,
    complete_bipartite,
    cycle,
    diameter,
    empty,
    generate,
    is_complete_bipartite,
    path,
    relabel,
)
from edgebalance.graphio import parse_graph, read_graph, serialize_graph, write_graph

from oracles import floyd_warshall, has_odd_cycle, kmn_edges


# --------------------------------------------------------------- build


def test_build_single_edge():
    g = build_graph(2, [(0, 1)])
    assert g.vertex_count == 2 and g.edges == ((0, 1),) and g.connected


def test_build_k23_from_pairs():
    g = build_graph(5, kmn_edges(2, 3))
    assert g.edge_count == 6 and g.connected
    assert g == complete_bipartite(2, 3)


def test_build_canonicalizes_order():
    g = build_graph(4, [(3, 2), (1, 0), (2, 0)])
    assert g.edges == ((0, 1), (0, 2), (2, 3))
    assert g.adjacency == ((1, 2), (0,), (0, 3), (2,))


@pytest.mark.parametrize(
    "n, pairs, exc",
    [
        (3, [(0, 1), (1, 0)], DuplicateEdge),
        (3, [(1, 1)], SelfLoop),
        (3, [(0, 3)], VertexOutOfRange),
        (3, [(-1, 0)], VertexOutOfRange),
    ],
)
def test_build_rejects(n, pairs, exc):
    with pytest.raises(exc):
        build_graph(n, pairs)


def test_disconnected_is_constructible_but_not_analysable():
    g = build_graph(4, [(0, 1), (2, 3)])
    assert not g.connected
    with pytest.raises(DisconnectedGraph):
        all_pairs_distances(g)
    with pytest.raises(DisconnectedGraph):
        bipartition(g)


def test_edge_index_missing():
    with pytest.raises(EdgeNotFound):
        path(3).edge_index(0, 2)


# ------------------------------------------------------------ families


def test_generate_examples():
    k23 = generate(FamilySpec("complete_bipartite", (2, 3)))
    assert (k23.vertex_count, k23.edge_count) == (5, 6)
    assert all(u < 2 <= v for u, v in k23.edges)
    c4 = generate(FamilySpec("cycle", (4,)))
    assert (c4.vertex_count, c4.edge_count) == (4, 4)
    e3 = generate(FamilySpec("empty", (3,)))
    assert (e3.vertex_count, e3.edge_count, e3.connected) == (3, 0, False)


@pytest.mark.parametrize(
    "family, params",
    [("cycle", (2,)), ("path", (0,)), ("complete", (0,)), ("complete_bipartite", (0, 2)),
     ("empty", (0,)), ("cycle", (3, 4)), ("nope", (3,))],
)
def test_generate_rejects(family, params):
    with pytest.raises(InvalidParameter):
        generate(FamilySpec(family, params))


def test_family_label():
    assert FamilySpec("complete_bipartite", (2, 3)).label == "complete_bipartite(2,3)"


@pytest.mark.parametrize("k", range(1, 9))
def test_family_sizes(k):
    assert complete(k).edge_count == k * (k - 1) // 2
    assert path(k).edge_count == k - 1
    if k >= 3:
        assert cycle(k).edge_count == k
    assert complete_bipartite(k, k + 1).edge_count == k * (k + 1)


# ----------------------------------------------------------- distances


def test_distance_examples():
    assert all_pairs_distances(complete_bipartite(2, 3))(0, 1) == 2
    assert all_pairs_distances(cycle(6))(0, 3) == 3
    assert all_pairs_distances(path(3))(0, 2) == 2


def test_diameter_examples():
    assert diameter(all_pairs_distances(complete_bipartite(2, 3))) == 2
    assert diameter(all_pairs_distances(cycle(6))) == 3
    assert diameter(all_pairs_distances(complete(2))) == 1


def _family_members(limit=64):
    out = []
    for k in range(2, limit + 1):
        out.append(path(k))
        if k >= 3:
            out.append(cycle(k))
        if k <= 20:
            out.append(complete(k))
    for m in range(1, 9):
        for n in range(m, 9):
            out.append(complete_bipartite(m, n))
    return out


def test_distance_axioms_on_families():
    for g in _family_members():
        d = all_pairs_distances(g).dist.astype(np.int64)
        n = g.vertex_count
        assert (np.diag(d) == 0).all()
        assert (d == d.T).all()
        off = ~np.eye(n, dtype=bool)
        assert (d[off] >= 1).all()
        # d[u, w] <= d[u, v] + d[v, w] for every v, via min-plus
        through = (d[:, :, None] + d[None, :, :]).min(axis=1)
        assert (d <= through).all()


def test_distances_match_floyd_warshall():
    for g in _family_members(24):
        fw = floyd_warshall(g.vertex_count, g.edges)
        assert all_pairs_distances(g).dist.tolist() == fw


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 14), st.data())
def test_distances_match_networkx_on_random_connected(n, data):
    # random spanning tree plus extra edges
    pairs = [(data.draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    extra = data.draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    edges = set((min(a, b), max(a, b)) for a, b in pairs + extra if a != b)
    g = build_graph(n, sorted(edges))
    ref = dict(nx.all_pairs_shortest_path_length(nx.Graph(list(edges))))
    o = all_pairs_distances(g)
    for u in range(n):
        assert bfs_distances(g, u) == [ref[u][v] for v in range(n)]
        assert o.dist[u].tolist() == [ref[u][v] for v in range(n)]


def test_oracle_is_read_only():
    d = all_pairs_distances(cycle(5)).dist
    with pytest.raises(ValueError):
        d[0, 1] = 7


# --------------------------------------------------------- bipartition


def test_bipartition_examples():
    assert bipartition(complete_bipartite(2, 3)) == (0, 0, 1, 1, 1)
    assert bipartition(cycle(5)) is None
    assert bipartition(cycle(6)) is not None


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 10), st.data())
def test_bipartition_matches_odd_cycle_search(n, data):
    pairs = [(data.draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    extra = data.draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=n))
    edges = sorted(set((min(a, b), max(a, b)) for a, b in pairs + extra if a != b))
    g = build_graph(n, edges)
    coloring = bipartition(g)
    assert (coloring is not None) == (not has_odd_cycle(n, edges))
    if coloring is not None:
        assert coloring[0] == 0
        assert all(coloring[u] != coloring[v] for u, v in edges)


def test_is_complete_bipartite():
    assert is_complete_bipartite(complete_bipartite(3, 2)) == (2, 3)
    assert is_complete_bipartite(cycle(4)) == (2, 2)
    assert is_complete_bipartite(cycle(6)) is None
    assert is_complete_bipartite(path(3)) == (1, 2)


def test_relabel_preserves_distances_multiset():
    g = complete_bipartite(2, 3)
    h = relabel(g, [4, 3, 2, 1, 0])
    assert h.edge_count == g.edge_count
    a = sorted(all_pairs_distances(g).dist.ravel().tolist())
    b = sorted(all_pairs_distances(h).dist.ravel().tolist())
    assert a == b


# ------------------------------------------------------------------ io


def test_serialize_format():
    text = serialize_graph(path(3), "p3")
    assert text == "# p3\ng 3\ne 0 1\ne 1 2\n"


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 12), st.data())
def test_serialize_parse_round_trip(n, data):
    pairs = data.draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=3 * n))
    edges = sorted(set((min(a, b), max(a, b)) for a, b in pairs if a != b))
    g = build_graph(n, edges)
    assert parse_graph(serialize_graph(g)) == g
    assert build_graph(n, parse_graph(serialize_graph(g)).edges) == g


def test_parse_tolerates_comments_and_blank_lines():
    g = parse_graph("# hi\n\ng 3\n# mid\ne 1 2\ne 0 1\n")
    assert g == path(3)


@pytest.mark.parametrize(
    "text",
    ["", "e 0 1\n", "g x\n", "g 3\ne 0\n", "g 3\nq 0 1\n", "g 2\ng 2\n"],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_graph(text)


@pytest.mark.parametrize("text, exc", [("g 3\ne 0 5\n", VertexOutOfRange), ("g 3\ne 1 1\n", SelfLoop),
                                       ("g 3\ne 0 1\ne 1 0\n", DuplicateEdge)])
def test_parse_well_formed_but_invalid_graph(text, exc):
    with pytest.raises(exc):
        parse_graph(text)


def test_file_round_trip(tmp_path):
    p = tmp_path / "k23.eg"
    write_graph(complete_bipartite(2, 3), p, "k23")
    assert read_graph(p) == complete_bipartite(2, 3)
    assert p.read_bytes().startswith(b"# k23\ng 5\n")


def test_empty_graph_serializes():
    assert parse_graph(serialize_graph(empty(3))) == empty(3)
