"""Enumeration of connected regular graphs up to isomorphism.

Labelled candidates are produced in a breadth-first discovery order (each
vertex's not-yet-seen neighbours receive the next consecutive labels), which
every connected graph admits. Duplicates are removed with a canonical form
computed by individualisation-refinement with automorphism pruning.
"""

from __future__ import annotations

from .graph import Graph, canonical_edge, relabel, write_graph6


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition; sub-cells keep the parent's place."""
    while True:
        where = {v: i for i, c in enumerate(cells) for v in c}
        out = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in c:
                counts = [0] * len(cells)
                for u in g.adj[v]:
                    counts[where[u]] += 1
                groups.setdefault(tuple(counts), []).append(v)
            if len(groups) > 1:
                changed = True
            out.extend(sorted(groups[k]) for k in sorted(groups))
        cells = out
        if not changed:
            return cells


def canonical_labelling(g: Graph) -> list[int]:
    """Map ``v -> label`` such that isomorphic graphs get identical relabelled edge sets."""
    n = g.n
    if n == 0:
        return []
    best = {"cert": None, "lab": None}
    generators: list[tuple[int, ...]] = []

    def certificate(lab):
        return tuple(sorted(canonical_edge(lab[u], lab[v]) for u, v in g.edges))

    def orbit_reps(cell, path):
        parent = {v: v for v in cell}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gen in generators:
            if all(gen[p] == p for p in path):
                for v in cell:
                    w = gen[v]
                    if w in parent:
                        a, b = find(v), find(w)
                        if a != b:
                            parent[max(a, b)] = min(a, b)
        return find

    def search(cells, path):
        if all(len(c) == 1 for c in cells):
            lab = [0] * n
            for i, c in enumerate(cells):
                lab[c[0]] = i
            cert = certificate(lab)
            if best["cert"] is None or cert < best["cert"]:
                best["cert"], best["lab"] = cert, lab
            elif cert == best["cert"]:
                inv_best = [0] * n
                for v, x in enumerate(best["lab"]):
                    inv_best[x] = v
                generators.append(tuple(inv_best[lab[v]] for v in range(n)))
            return
        idx = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[idx]
        explored = []
        for v in target:
            find = orbit_reps(target, path)
            if any(find(v) == find(w) for w in explored):
                continue
            explored.append(v)
            child = cells[:idx] + [[v], [w for w in target if w != v]] + cells[idx + 1:]
            search(_refine(g, child), path + [v])

    search(_refine(g, [list(range(n))]), [])
    return best["lab"]


def canonical_form(g: Graph) -> Graph:
    return relabel(g, canonical_labelling(g))


def canonical_graph6(g: Graph) -> str:
    return write_graph6(canonical_form(g))


def _labelled_regular(n: int, d: int):
    """Yield edge lists of connected d-regular graphs in BFS discovery labelling."""
    nbrs = [set() for _ in range(n)]

    def rec(v, discovered):
        if v == n:
            yield sorted(canonical_edge(u, w) for u in range(n) for w in nbrs[u] if u < w)
            return
        if v >= discovered:
            return  # v unreachable from earlier vertices
        need = d - len(nbrs[v])
        if need < 0:
            return
        pool = [u for u in range(v + 1, discovered) if len(nbrs[u]) < d]
        for j in range(min(need, len(pool)), -1, -1):
            fresh = need - j
            if discovered + fresh > n:
                continue
            for old in _combos(pool, j):
                new = list(range(discovered, discovered + fresh))
                for u in old + new:
                    nbrs[v].add(u)
                    nbrs[u].add(v)
                yield from rec(v + 1, discovered + fresh)
                for u in old + new:
                    nbrs[v].discard(u)
                    nbrs[u].discard(v)

    yield from rec(0, 1)


def _combos(pool, j):
    from itertools import combinations
    return (list(c) for c in combinations(pool, j))


def regular_graphs(n: int, d: int) -> list[Graph]:
    """Connected d-regular graphs on n vertices, one canonical representative each."""
    if n < 1 or d < 0 or d >= max(n, 1) or (n * d) % 2:
        return []
    if n == 1:
        return [Graph.from_edges(1, [])]
    seen = {}
    for edges in _labelled_regular(n, d):
        g = Graph.from_edges(n, edges)
        key = canonical_graph6(g)
        if key not in seen:
            seen[key] = canonical_form(g)
    return [seen[k] for k in sorted(seen)]


def regular_corpus(max_n: int, min_n: int = 3) -> list[Graph]:
    """All connected regular graphs with ``min_n <= n <= max_n``, ordered by (n, degree, graph6)."""
    if not 3 <= max_n <= 12:
        raise ValueError("regular_corpus supports 3 <= max_n <= 12")
    out = []
    for n in range(min_n, max_n + 1):
        for d in range(1, n):
            out.extend(regular_graphs(n, d))
    return out
