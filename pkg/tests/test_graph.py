from itertools import permutations

import pytest
from hypothesis import given, settings

from disticolor.graph import (FamilySpec, Graph, Graph6Error, GraphError, bfs_distances,
                              complete_bipartite, complete_graph, cycle_graph, generate,
                              hamiltonian_path, induced_subgraph, is_connected, parse_graph6,
                              petersen, random_regular, regular_degree, write_graph6)

from .conftest import graphs


@pytest.mark.parametrize("text, n, edges", [
    ("A_", 2, [(0, 1)]),
    ("Bw", 3, [(0, 1), (0, 2), (1, 2)]),
    ("Cl", 4, [(0, 1), (0, 3), (1, 2), (2, 3)]),
    ("@", 1, []),
])
def test_parse_graph6_examples(text, n, edges):
    g = parse_graph6(text)
    assert g.n == n
    assert list(g.edges) == edges


def test_write_graph6_examples():
    assert write_graph6(complete_graph(2)) == "A_"
    assert write_graph6(complete_graph(3)) == "Bw"
    assert write_graph6(Graph.from_edges(1, [])) == "@"


@pytest.mark.parametrize("bad", ["", "A", "A_?", "B\x7f", "Bx"])
def test_parse_graph6_rejects_malformed(bad):
    # "Bx": K3 has 3 bits, 'x' = 57 = 111001 sets a padding bit
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_write_graph6_range():
    with pytest.raises(Graph6Error):
        write_graph6(Graph.from_edges(63, []))


@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    assert parse_graph6(write_graph6(g)) == g


def test_graph_invariants_enforced():
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 1), (1, 0)])
    g = petersen()
    assert g.m == sum(g.degree(v) for v in range(g.n)) // 2


@pytest.mark.parametrize("spec, n, m, d", [
    (FamilySpec("cycle", (5,)), 5, 5, 2),
    (FamilySpec("petersen"), 10, 15, 3),
    (FamilySpec("circulant", (8, 1, 4)), 8, 12, 3),
    (FamilySpec("complete", (6,)), 6, 15, 5),
    (FamilySpec("complete_bipartite", (3,)), 6, 9, 3),
    (FamilySpec("hypercube", (4,)), 16, 32, 4),
    (FamilySpec("prism", (5,)), 10, 15, 3),
    (FamilySpec("random_regular", (12, 5), 3), 12, 30, 5),
])
def test_generate_families(spec, n, m, d):
    g = generate(spec)
    assert (g.n, g.m, regular_degree(g)) == (n, m, d)
    assert is_connected(g)


def test_random_regular_deterministic():
    assert random_regular(14, 4, seed=7) == random_regular(14, 4, seed=7)
    with pytest.raises(GraphError):
        random_regular(7, 3, seed=1)


@pytest.mark.parametrize("spec", [FamilySpec("cycle", (2,)), FamilySpec("nope", (3,)),
                                  FamilySpec("circulant", (6, 6))])
def test_generate_invalid(spec):
    with pytest.raises(GraphError):
        generate(spec)


def test_is_connected():
    assert is_connected(cycle_graph(6))
    assert not is_connected(Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))
    assert is_connected(Graph.from_edges(1, []))


def test_regular_degree():
    assert regular_degree(petersen()) == 3
    assert regular_degree(Graph.from_edges(3, [(0, 1), (1, 2)])) is None
    assert regular_degree(complete_graph(5)) == 4


def test_induced_subgraph():
    h, mapping = induced_subgraph(complete_graph(4), [0, 1, 2])
    assert h == complete_graph(3)
    h, mapping = induced_subgraph(cycle_graph(6), [0, 1, 3, 4])
    assert list(h.edges) == [(0, 1), (2, 3)]
    assert mapping == {0: 0, 1: 1, 3: 2, 4: 3}
    h, mapping = induced_subgraph(petersen(), [])
    assert h.n == 0 and mapping == {}


@given(graphs(max_n=8))
def test_induced_subgraph_preserves_adjacency(g):
    vs = [v for v in range(g.n) if v % 2 == 0 or v == g.n - 1]
    h, phi = induced_subgraph(g, vs)
    for u in vs:
        for v in vs:
            if u != v:
                assert h.has_edge(phi[u], phi[v]) == g.has_edge(u, v)


def test_hamiltonian_path_examples():
    assert hamiltonian_path(cycle_graph(5)) == [0, 1, 2, 3, 4]
    assert hamiltonian_path(complete_graph(4)) == [0, 1, 2, 3]
    assert hamiltonian_path(complete_bipartite(1, 3)) is None


def _brute_ham(g):
    for p in permutations(range(g.n)):
        if all(g.has_edge(a, b) for a, b in zip(p, p[1:])):
            return list(p)
    return None


@settings(max_examples=60)
@given(graphs(max_n=6))
def test_hamiltonian_path_matches_brute_force(g):
    # permutations() is lexicographic, so the first hit is the lexicographically least path
    assert hamiltonian_path(g) == _brute_ham(g)


def test_bfs_distances():
    assert bfs_distances(cycle_graph(6), 0) == [0, 1, 2, 3, 2, 1]
    assert bfs_distances(complete_graph(5), 0) == [0, 1, 1, 1, 1]
    p = petersen()
    for v in range(p.n):
        d = bfs_distances(p, v)
        assert sorted(d.count(k) for k in set(d)) == [1, 3, 6]
    with pytest.raises(GraphError):
        bfs_distances(Graph.from_edges(2, []), 0)
