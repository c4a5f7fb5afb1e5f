"""Brute-force ground truth for distinguishing colourings.

The pruned depth-first search here is the engine's fallback and the
reference the engine is checked against; :func:`reference_search` is the
unpruned enumeration the pruned search is checked against.
"""

from __future__ import annotations

from itertools import combinations, product

import numpy as np

from .graph import Graph, is_complete
from .symmetry import (EdgeColouring, PermGroup, automorphisms, colour_preserving,
                       edge_id_matrix, is_asymmetric)

DEFAULT_BUDGET = 10 ** 8


class BudgetExceeded(RuntimeError):
    pass


class UndefinedIndex(ValueError):
    pass


def edge_permutations(g: Graph, grp: PermGroup) -> np.ndarray:
    """Action of each group element on edge indices, one row per element."""
    eid = edge_id_matrix(g)
    us = np.array([e[0] for e in g.edges], dtype=np.int64)
    vs = np.array([e[1] for e in g.edges], dtype=np.int64)
    return eid[grp.perms[:, us], grp.perms[:, vs]]


def find_distinguishing_colouring(g: Graph, k: int = 2, budget: int = DEFAULT_BUDGET,
                                  cap: int | None = None, group: PermGroup | None = None,
                                  stats: dict | None = None) -> EdgeColouring | None:
    """Lexicographically first distinguishing ``k``-colouring, or None.

    Edges are assigned in canonical order, colours tried in increasing
    order. A prefix is cut when some non-identity automorphism already agrees
    with it on every assigned pair and moves no unassigned edge: no extension
    can break it. Raises :class:`BudgetExceeded` after ``budget`` nodes.
    """
    if k < 1:
        raise ValueError("k must be positive")
    m = g.m
    grp = automorphisms(g, cap) if group is None else group
    nontrivial = ~np.all(grp.perms == np.arange(g.n), axis=1)
    if not nontrivial.any():
        return EdgeColouring(g, (0,) * m)
    if m == 0:
        return None
    # elements acting trivially on edges (the swap in K2) can never be broken
    ep = edge_permutations(g, grp)[nontrivial]
    ident = np.arange(m)
    inv = np.argsort(ep, axis=1)
    moved = ep != ident
    # last edge index each element moves; it fixes all later edges
    last_moved = np.where(moved.any(axis=1), m - 1 - np.argmax(moved[:, ::-1], axis=1), -1)

    col = np.full(m, -1, dtype=np.int64)
    nodes = 0

    def rec(d, alive):
        nonlocal nodes
        if d == m:
            return len(alive) == 0
        fwd = ep[alive, d]
        back = inv[alive, d]
        for c in range(k):
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"search exceeded {budget} nodes")
            col[d] = c
            ok = np.ones(len(alive), dtype=bool)
            f_assigned = fwd <= d
            ok[f_assigned] &= col[fwd[f_assigned]] == c
            b_assigned = back <= d
            ok[b_assigned] &= col[back[b_assigned]] == c
            nxt = alive[ok]
            if len(nxt) and np.any(last_moved[nxt] <= d):
                continue
            if rec(d + 1, nxt):
                return True
        col[d] = -1
        return False

    found = rec(0, np.arange(len(ep)))
    if stats is not None:
        stats["nodes"] = nodes
    if found:
        return EdgeColouring(g, tuple(int(c) for c in col))
    return None


def reference_search(g: Graph, k: int = 2, cap: int | None = None) -> EdgeColouring | None:
    """Unpruned enumeration of all k-colourings in lexicographic order."""
    grp = automorphisms(g, cap)
    for cols in product(range(k), repeat=g.m):
        if colour_preserving(grp, (g, cols)).is_trivial():
            return EdgeColouring(g, cols)
    return None


def distinguishing_index(g: Graph, max_k: int = 4, budget: int = DEFAULT_BUDGET,
                         cap: int | None = None) -> int:
    if g.n == 2 and g.m == 1:
        raise UndefinedIndex("distinguishing index is undefined for K2")
    grp = automorphisms(g, cap)
    for k in range(1, max_k + 1):
        if find_distinguishing_colouring(g, k, budget, group=grp) is not None:
            return k
    raise UndefinedIndex(f"no distinguishing colouring with at most {max_k} colours")


def _has_twins(n, nbrs):
    # two vertices with equal neighbourhoods (apart from each other) are swapped by an automorphism
    for u, v in combinations(range(n), 2):
        if nbrs[u] - {v} == nbrs[v] - {u}:
            return True
    return False


def asymmetric_spanning_search(n: int) -> list[tuple[int, int]] | None:
    """Edge set on ``n`` labelled vertices with trivial automorphism group.

    Minimises the edge count, then lexicographic order of the edge list.
    """
    if n < 1:
        raise ValueError("n must be positive")
    pairs = list(combinations(range(n), 2))
    for size in range(len(pairs) + 1):
        for chosen in combinations(pairs, size):
            nbrs = [set() for _ in range(n)]
            for u, v in chosen:
                nbrs[u].add(v)
                nbrs[v].add(u)
            if n > 1 and _has_twins(n, nbrs):
                continue
            if is_asymmetric(Graph.from_edges(n, chosen)):
                return list(chosen)
    return None


def asymmetric_red_colouring(g: Graph, red_edges) -> EdgeColouring:
    """Colour ``red_edges`` red and the rest blue."""
    red = set(red_edges)
    return EdgeColouring(g, tuple(0 if e in red else 1 for e in g.edges))


def complete_graph_search(g: Graph) -> EdgeColouring | None:
    """Distinguishing colouring of K_n from an asymmetric spanning subgraph."""
    if not is_complete(g):
        raise ValueError("graph is not complete")
    red = asymmetric_spanning_search(g.n)
    return None if red is None else asymmetric_red_colouring(g, red)
