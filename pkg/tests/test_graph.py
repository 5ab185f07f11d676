"""Core graph representation: construction, BFS, diameter, induced subgraphs."""

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clubkit import (
    UNREACHABLE,
    EmptyGraph,
    InvalidEdge,
    InvalidVertex,
    bfs_distances,
    build_graph,
    connected_components,
    diameter,
    induced_subgraph,
    is_s_club,
)


def path(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n):
    return build_graph(n, list(combinations(range(n), 2)))


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


@st.composite
def graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    if pairs:
        edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    else:
        edges = []
    return build_graph(n, edges)


def test_build_path():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert g.n_vertices == 3
    assert g.edges == ((0, 1), (1, 2))
    assert g.adjacency[1] == frozenset({0, 2})


def test_build_single_vertex():
    g = build_graph(1, [])
    assert g.n_vertices == 1
    assert g.n_edges == 0


def test_build_rejects_self_loop():
    with pytest.raises(InvalidEdge):
        build_graph(3, [(0, 0)])


def test_build_rejects_out_of_range():
    with pytest.raises(InvalidVertex):
        build_graph(3, [(0, 3)])


def test_build_deduplicates_and_symmetrizes():
    g = build_graph(3, [(1, 0), (0, 1), (1, 2)])
    assert g.n_edges == 2
    assert g.has_edge(0, 1) and g.has_edge(1, 0)


def test_bfs_path():
    assert bfs_distances(path(3), 0) == [0, 1, 2]


def test_bfs_disconnected():
    assert bfs_distances(build_graph(2, []), 0) == [0, UNREACHABLE]


def test_bfs_triangle():
    assert bfs_distances(complete(3), 2) == [1, 1, 0]


def test_bfs_bad_source():
    with pytest.raises(InvalidVertex):
        bfs_distances(path(3), 5)


def test_diameter_examples():
    assert diameter(complete(3)) == 1
    assert diameter(path(3)) == 2
    assert diameter(build_graph(4, [(0, 1), (2, 3)])) == UNREACHABLE
    assert diameter(build_graph(1, [])) == 0


def test_diameter_empty_graph():
    with pytest.raises(EmptyGraph):
        diameter(build_graph(0, []))


def test_induced_subgraph_examples():
    sub, remap = induced_subgraph(complete(4), {0, 1, 2})
    assert sub.n_vertices == 3 and sub.n_edges == 3
    assert remap == {0: 0, 1: 1, 2: 2}

    sub, remap = induced_subgraph(path(3), {0, 2})
    assert sub.n_vertices == 2 and sub.n_edges == 0
    assert remap == {0: 0, 2: 1}

    sub, remap = induced_subgraph(path(3), set())
    assert sub.n_vertices == 0 and remap == {}


def test_induced_subgraph_bad_id():
    with pytest.raises(InvalidVertex):
        induced_subgraph(path(3), {0, 7})


def test_is_s_club_examples():
    c5 = cycle(5)
    assert is_s_club(c5, range(5), 2)
    assert not is_s_club(c5, range(5), 1)
    assert not is_s_club(path(4), range(4), 2)


def test_is_s_club_small_sets():
    g = path(3)
    assert is_s_club(g, set(), 2)
    assert is_s_club(g, {1}, 1)


def test_is_s_club_disconnected_set():
    assert not is_s_club(path(3), {0, 2}, 5)


def test_connected_components():
    two_triangles = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    comps = connected_components(two_triangles)
    assert comps == [frozenset({0, 1, 2}), frozenset({3, 4, 5})]
    assert connected_components(build_graph(1, [])) == [frozenset({0})]
    assert connected_components(path(3)) == [frozenset({0, 1, 2})]


def _floyd_warshall_diameter(g):
    # Independent O(n^3) reference for cross-checking BFS-based diameters.
    n = g.n_vertices
    dist = [[0 if i == j else UNREACHABLE for j in range(n)] for i in range(n)]
    for u, v in g.edges:
        dist[u][v] = dist[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                through = dist[i][k] + dist[k][j]
                if through < dist[i][j]:
                    dist[i][j] = through
    return max(max(row) for row in dist)


@given(graphs())
def test_diameter_matches_pairwise_reference(g):
    assert diameter(g) == _floyd_warshall_diameter(g)


@given(graphs(max_n=8))
def test_bfs_distances_symmetric(g):
    table = [bfs_distances(g, v) for v in range(g.n_vertices)]
    for u in range(g.n_vertices):
        for v in range(g.n_vertices):
            assert table[u][v] == table[v][u]


@given(graphs(max_n=8))
@settings(max_examples=50)
def test_triangle_inequality(g):
    table = [bfs_distances(g, v) for v in range(g.n_vertices)]
    for u in range(g.n_vertices):
        for v in range(g.n_vertices):
            for w in range(g.n_vertices):
                if table[u][v] is not UNREACHABLE and table[v][w] is not UNREACHABLE:
                    assert table[u][w] <= table[u][v] + table[v][w]


@given(graphs(max_n=8), st.integers(1, 4))
def test_is_s_club_monotone_in_s(g, s):
    vertices = range(g.n_vertices)
    if is_s_club(g, vertices, s):
        assert is_s_club(g, vertices, s + 1)


@given(graphs(max_n=8))
def test_is_s_club_agrees_with_diameter(g):
    sub, _ = induced_subgraph(g, range(g.n_vertices))
    for s in (1, 2, 3):
        assert is_s_club(g, range(g.n_vertices), s) == (diameter(sub) <= s)
