from itertools import combinations
from math import factorial

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from disticolor.graph import (Graph, bfs_distances, circulant, complete_bipartite, complete_graph,
                              cycle_graph, hypercube, petersen)
from disticolor.symmetry import (BLUE, RED, EdgeColouring, GroupTooLarge, PermGroup, automorphisms,
                                 colour_preserving, compose, format_cycles, inverse, is_asymmetric,
                                 is_distinguishing, preserved_automorphism, stabilizer, vertex_orbits)

from .conftest import brute_automorphisms, graphs


def colouring_with_blue(g, blue):
    blue = {tuple(sorted(e)) for e in blue}
    return EdgeColouring(g, tuple(BLUE if e in blue else RED for e in g.edges))


@pytest.mark.parametrize("g, order", [
    (complete_graph(3), 6),
    (cycle_graph(4), 8),
    (petersen(), 120),
])
def test_automorphism_orders(g, order):
    assert automorphisms(g).order == order


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7))
def test_automorphisms_match_brute_force(g):
    assert automorphisms(g).elements == sorted(brute_automorphisms(g))


def test_group_too_large():
    with pytest.raises(GroupTooLarge):
        automorphisms(complete_graph(6), cap=100)


def test_stabilizer_examples():
    assert stabilizer(automorphisms(complete_graph(3)), 0).order == 2
    assert stabilizer(automorphisms(cycle_graph(5)), 0).order == 2
    assert stabilizer(automorphisms(petersen()), 0).order == 12


def test_colour_preserving_examples():
    c4 = cycle_graph(4)
    grp = automorphisms(c4)
    assert colour_preserving(grp, EdgeColouring.monochromatic(c4)) == grp
    one_red = EdgeColouring(c4, tuple(RED if e == (0, 1) else BLUE for e in c4.edges))
    kept = colour_preserving(grp, one_red)
    assert kept.order == 2
    assert (1, 0, 3, 2) in kept
    k2 = complete_graph(2)
    assert colour_preserving(automorphisms(k2), EdgeColouring(k2, (RED,))).order == 2


def test_vertex_orbits_examples():
    p = petersen()
    grp = stabilizer(automorphisms(p), 0)
    orb = vertex_orbits(grp, bfs_distances(p, 0))
    assert [len(b) for b in orb.blocks] == [1, 3, 6]
    g = cycle_graph(6)
    triv = PermGroup.trivial(6)
    orb = vertex_orbits(triv, bfs_distances(g, 0))
    assert orb.blocks == ((0,), (1,), (5,), (2,), (4,), (3,))
    k5 = complete_graph(5)
    orb = vertex_orbits(stabilizer(automorphisms(k5), 0), bfs_distances(k5, 0))
    assert orb.blocks == ((0,), (1, 2, 3, 4))


def test_is_distinguishing_examples():
    c6 = cycle_graph(6)
    assert is_distinguishing(c6, colouring_with_blue(c6, [(0, 1), (2, 3), (3, 4)]))
    c4 = cycle_graph(4)
    assert not is_distinguishing(c4, EdgeColouring.monochromatic(c4))
    k2 = complete_graph(2)
    for col in (RED, BLUE):
        assert not is_distinguishing(k2, EdgeColouring(k2, (col,)))


def test_c6_example_against_all_dihedral_elements():
    c6 = cycle_graph(6)
    c = colouring_with_blue(c6, [(0, 1), (2, 3), (3, 4)])
    kept = [p for p in brute_automorphisms(c6)
            if all(c[tuple(sorted((p[u], p[v])))] == c[(u, v)] for u, v in c6.edges)]
    assert kept == [tuple(range(6))]


def test_preserved_automorphism_witness():
    c4 = cycle_graph(4)
    w = preserved_automorphism(c4, EdgeColouring.monochromatic(c4))
    assert w is not None and w != (0, 1, 2, 3)
    assert format_cycles((1, 0, 2)) == "(0 1)"


def test_is_asymmetric_small_graphs_exhaustive():
    assert is_asymmetric(Graph.from_edges(1, []))
    for n in range(2, 6):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = Graph.from_edges(n, [p for k, p in enumerate(pairs) if mask >> k & 1])
            assert not is_asymmetric(g)


@pytest.mark.parametrize("extra", [
    [(0, 6)],                      # one pendant: reflection through vertex 0 survives
    [(0, 6), (1, 7), (7, 8)],      # pendants of lengths 1 and 2 at adjacent vertices
    [(0, 6), (2, 7), (7, 8)],
])
def test_is_asymmetric_c6_with_pendants(extra):
    n = 6 + len({v for e in extra for v in e if v >= 6})
    g = Graph.from_edges(n, list(cycle_graph(6).edges) + extra)
    assert is_asymmetric(g) == (len(brute_automorphisms(g)) == 1)


CORPUS_GROUPS = [cycle_graph(5), cycle_graph(6), complete_graph(4), petersen(), hypercube(3),
                 complete_bipartite(3, 3), circulant(9, [1, 2]), circulant(8, [1, 4])]


@pytest.mark.parametrize("g", CORPUS_GROUPS, ids=lambda g: f"n{g.n}m{g.m}")
def test_group_axioms(g):
    grp = automorphisms(g)
    elems = set(grp)
    assert tuple(range(g.n)) in elems
    for p in elems:
        assert inverse(p) in elems
        for q in elems:
            assert compose(p, q) in elems


@pytest.mark.parametrize("g", CORPUS_GROUPS, ids=lambda g: f"n{g.n}m{g.m}")
def test_orbit_stabilizer(g):
    grp = automorphisms(g)
    for v in range(g.n):
        assert grp.order == len(grp.orbit(v)) * stabilizer(grp, v).order


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_colour_preserving_monotone_and_swap_invariant(data):
    g = data.draw(st.sampled_from(CORPUS_GROUPS))
    grp = automorphisms(g)
    cols = data.draw(st.lists(st.sampled_from([RED, BLUE]), min_size=g.m, max_size=g.m))
    c = EdgeColouring(g, tuple(cols))
    k = data.draw(st.integers(0, g.m - 1))
    finer = list(cols)
    finer[k] = 2  # a third colour only refines the partition of edges
    base = colour_preserving(grp, c)
    refined = colour_preserving(grp, (g, finer))
    assert set(refined) <= set(base)
    assert is_distinguishing(g, c) == is_distinguishing(g, c.swapped())
    assert is_distinguishing(g, c) == base.is_trivial()


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_vertex_orbits_nested(data):
    g = data.draw(st.sampled_from(CORPUS_GROUPS))
    grp = automorphisms(g)
    cols = data.draw(st.lists(st.sampled_from([RED, BLUE]), min_size=g.m, max_size=g.m))
    sub = colour_preserving(grp, (g, cols))
    dist = bfs_distances(g, 0)
    big = vertex_orbits(grp, dist).blocks
    small = vertex_orbits(sub, dist).blocks
    for b in small:
        assert any(set(b) <= set(B) for B in big)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8, 9])
def test_cycle_group_order(n):
    assert automorphisms(cycle_graph(n)).order == 2 * n


def test_group_elements_are_permutations():
    grp = automorphisms(petersen())
    assert np.all(np.sort(grp.perms, axis=1) == np.arange(10))
    assert factorial(5) == grp.order
