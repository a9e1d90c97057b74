import itertools
import random

import pytest

from recmath import graphs
from oracles import count_walks_brute, hierholzer_trail

# Loop at v1; edges v1v2, v2v3, v2v4, v3v4 (0-based here).
WALK_GRAPH = graphs.Graph(4, ((0, 0), (0, 1), (1, 2), (1, 3), (2, 3)))

A = ((1, 1, 0, 0), (1, 0, 1, 1), (0, 1, 0, 1), (0, 1, 1, 0))
A2 = ((2, 1, 1, 1), (1, 3, 1, 1), (1, 1, 2, 1), (1, 1, 1, 2))
A3 = ((3, 4, 2, 2), (4, 3, 4, 4), (2, 4, 2, 3), (2, 4, 3, 2))
A4 = ((7, 7, 6, 6), (7, 12, 7, 7), (6, 7, 7, 6), (6, 7, 6, 7))


def random_multigraph(rng, n_max=6, e_max=8, loops=True):
    n = rng.randint(1, n_max)
    edges = []
    for _ in range(rng.randint(0, e_max)):
        a = rng.randrange(n)
        b = rng.randrange(n)
        if not loops and a == b:
            continue
        edges.append((a, b))
    return graphs.Graph(n, tuple(edges))


def test_adjacency_matrix_reference_graph():
    assert graphs.adjacency_matrix(WALK_GRAPH).entries == A


def test_adjacency_matrix_edge_cases():
    assert graphs.adjacency_matrix(graphs.Graph(1, ())).entries == ((0,),)
    double = graphs.Graph(2, ((0, 1), (0, 1)))
    assert graphs.adjacency_matrix(double).entries == ((0, 2), (2, 0))


def test_matrix_powers_match_reference():
    m = graphs.adjacency_matrix(WALK_GRAPH)
    assert graphs.matrix_power(m, 2).entries == A2
    assert graphs.matrix_power(m, 3).entries == A3
    assert graphs.matrix_power(m, 4).entries == A4
    identity = tuple(
        tuple(1 if i == j else 0 for j in range(4)) for i in range(4)
    )
    assert graphs.matrix_power(m, 0).entries == identity


def test_count_walks_reference_values():
    assert graphs.count_walks(WALK_GRAPH, 1, 1, 2) == 3
    assert graphs.count_walks(WALK_GRAPH, 1, 1, 4) == 12
    assert graphs.count_walks(WALK_GRAPH, 0, 0, 1) == 1  # the loop


def test_count_walks_against_enumeration():
    rng = random.Random(7)
    for _ in range(60):
        g = random_multigraph(rng, n_max=5, e_max=7)
        u = rng.randrange(g.vertex_count)
        v = rng.randrange(g.vertex_count)
        for length in range(5):
            assert graphs.count_walks(g, u, v, length) == count_walks_brute(
                g.vertex_count, g.edges, u, v, length
            )


def test_eulerian_konigsberg():
    assert graphs.eulerian_class(graphs.konigsberg()).kind == "none"


def test_eulerian_simple_shapes():
    cycle = graphs.Graph(4, ((0, 1), (1, 2), (2, 3), (3, 0)))
    assert graphs.eulerian_class(cycle).kind == "circuit"
    path = graphs.Graph(3, ((0, 1), (1, 2)))
    result = graphs.eulerian_class(path)
    assert result.kind == "path"
    assert set(result.endpoints) == {0, 2}
    disconnected = graphs.Graph(4, ((0, 1), (2, 3)))
    assert graphs.eulerian_class(disconnected).kind == "none"


def test_eulerian_isolated_vertices_ignored():
    g = graphs.Graph(5, ((0, 1), (1, 2), (2, 0)))
    assert graphs.eulerian_class(g).kind == "circuit"


def test_eulerian_witnessed_by_hierholzer_on_corpus():
    rng = random.Random(11)
    checked = 0
    for _ in range(100):
        g = random_multigraph(rng)
        result = graphs.eulerian_class(g)
        trail = hierholzer_trail(g.vertex_count, g.edges)
        if result.kind in ("circuit", "path"):
            assert trail is not None, (g, result)
            assert len(trail) == len(g.edges) + 1
            if result.kind == "circuit" and g.edges:
                assert trail[0] == trail[-1]
            if result.kind == "path":
                assert {trail[0], trail[-1]} == set(result.endpoints)
            checked += 1
    assert checked > 10  # the corpus must actually exercise the witness


def test_is_tree():
    assert graphs.is_tree(graphs.Graph(3, ((0, 1), (1, 2))))
    assert not graphs.is_tree(graphs.Graph(3, ((0, 1), (1, 2), (2, 0))))
    # n-1 edges but disconnected (one isolated vertex, one extra edge in a cycle)
    assert not graphs.is_tree(graphs.Graph(4, ((0, 1), (0, 2), (1, 2))))
    assert not graphs.is_tree(graphs.Graph(2, ((0, 0),)))  # loop


def test_handshake_lemma_on_corpus():
    rng = random.Random(3)
    for _ in range(200):
        g = random_multigraph(rng)
        total = sum(g.degrees())
        assert total == 2 * len(g.edges)
        assert total % 2 == 0
        odd = sum(1 for d in g.degrees() if d % 2 == 1)
        assert odd % 2 == 0


def test_simple_graph_degree_pigeonhole():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(2, 8)
        possible = list(itertools.combinations(range(n), 2))
        chosen = rng.sample(possible, rng.randint(0, len(possible)))
        g = graphs.Graph(n, tuple(chosen))
        deg = g.degrees()
        assert len(set(deg)) < n  # at least two vertices share a degree


def test_complete_graph_edge_count():
    for n in range(1, 13):
        g = graphs.complete_graph(n)
        assert len(g.edges) == n * (n - 1) // 2


def test_parse_graph():
    g = graphs.parse_graph("# comment\n3\n0 1\n\n1 2  # trailing\n")
    assert g.vertex_count == 3
    assert g.edges == ((0, 1), (1, 2))
    with pytest.raises(ValueError):
        graphs.parse_graph("")
    with pytest.raises(ValueError):
        graphs.parse_graph("2\n0 1 2\n")
