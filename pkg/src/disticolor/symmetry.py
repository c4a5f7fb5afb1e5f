"""Automorphism groups as explicit element sets, orbits, and the colouring verifier.

Groups here are small enough (desk-scale graphs) to hold every element. They
are stored as an ``(order, n)`` integer array, one permutation per row, with
row ``k`` mapping vertex ``v`` to ``perms[k, v]``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .graph import Graph

RED, BLUE = 0, 1
COLOUR_NAMES = {RED: "R", BLUE: "B"}
UNCOLOURED = -1

DEFAULT_CAP = 10 ** 6


class GroupTooLarge(RuntimeError):
    pass


def default_cap() -> int:
    env = os.environ.get("DISTICOLOR_AUT_CAP")
    return int(env) if env else DEFAULT_CAP


# ---------------------------------------------------------------- colourings

@dataclass(frozen=True)
class EdgeColouring:
    """Total map from the edges of ``graph`` (by edge index) to small ints.

    Two-colourings use ``RED`` (0) and ``BLUE`` (1); the search oracle may
    produce larger colour values.
    """

    graph: Graph
    colours: tuple[int, ...]

    def __post_init__(self):
        if len(self.colours) != self.graph.m:
            raise ValueError(f"colouring has {len(self.colours)} entries, graph has {self.graph.m} edges")
        if any(c < 0 for c in self.colours):
            raise ValueError("colours must be non-negative")

    @classmethod
    def from_map(cls, g: Graph, colour_of: dict) -> "EdgeColouring":
        return cls(g, tuple(colour_of[e] for e in g.edges))

    @classmethod
    def monochromatic(cls, g: Graph, colour: int = RED) -> "EdgeColouring":
        return cls(g, (colour,) * g.m)

    def __getitem__(self, edge) -> int:
        return self.colours[self.graph.edge_id(*edge)]

    @property
    def num_colours(self) -> int:
        return len(set(self.colours))

    def edges_of(self, colour: int) -> list[tuple[int, int]]:
        return [e for e, c in zip(self.graph.edges, self.colours) if c == colour]

    def degree_in(self, v: int, colour: int) -> int:
        g = self.graph
        return sum(1 for u in g.adj[v] if self.colours[g.edge_id(v, u)] == colour)

    def recoloured(self, edge, colour: int) -> "EdgeColouring":
        cols = list(self.colours)
        cols[self.graph.edge_id(*edge)] = colour
        return EdgeColouring(self.graph, tuple(cols))

    def swapped(self) -> "EdgeColouring":
        """Exchange red and blue."""
        return EdgeColouring(self.graph, tuple(1 - c if c in (RED, BLUE) else c for c in self.colours))

    def as_array(self) -> np.ndarray:
        return np.array(self.colours, dtype=np.int64)


# ---------------------------------------------------------------- groups

class PermGroup:
    """A finite permutation group given by all of its elements."""

    def __init__(self, n: int, perms):
        arr = np.asarray(perms, dtype=np.int64).reshape(-1, n)
        if len(arr) == 0:
            raise ValueError("a group must contain the identity")
        # sorted unique rows make equality and iteration deterministic
        arr = np.unique(arr, axis=0)
        self.n = n
        self.perms = arr
        self.perms.setflags(write=False)

    @classmethod
    def trivial(cls, n: int) -> "PermGroup":
        return cls(n, [list(range(n))])

    def __len__(self):
        return len(self.perms)

    @property
    def order(self) -> int:
        return len(self.perms)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        for row in self.perms:
            yield tuple(int(x) for x in row)

    @property
    def elements(self) -> list[tuple[int, ...]]:
        return list(self)

    def __contains__(self, perm) -> bool:
        return bool(np.any(np.all(self.perms == np.asarray(perm), axis=1)))

    def __eq__(self, other):
        return (isinstance(other, PermGroup) and self.n == other.n
                and self.perms.shape == other.perms.shape and bool(np.all(self.perms == other.perms)))

    def __repr__(self):
        return f"PermGroup(n={self.n}, order={self.order})"

    def is_trivial(self) -> bool:
        return self.order == 1

    def subgroup(self, mask) -> "PermGroup":
        return PermGroup(self.n, self.perms[np.asarray(mask, dtype=bool)])

    def orbit(self, v: int) -> list[int]:
        return sorted(set(int(x) for x in self.perms[:, v]))

    def orbits(self) -> list[list[int]]:
        seen = set()
        out = []
        for v in range(self.n):
            if v not in seen:
                orb = self.orbit(v)
                seen.update(orb)
                out.append(orb)
        return out

    def fixes_pointwise(self, vs) -> bool:
        vs = list(vs)
        if not vs:
            return True
        return bool(np.all(self.perms[:, vs] == np.asarray(vs)))


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """``p`` after ``q``: v -> p[q[v]]."""
    return tuple(p[x] for x in q)


def inverse(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def is_identity(p: Sequence[int]) -> bool:
    return all(i == x for i, x in enumerate(p))


def format_cycles(p: Sequence[int]) -> str:
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


# ---------------------------------------------------------------- search

def _colour_matrix(g: Graph, colours) -> list[list[int]]:
    """n x n matrix: -2 for non-edges, otherwise the edge colour (0 when uncoloured input)."""
    mat = [[-2] * g.n for _ in range(g.n)]
    for k, (u, v) in enumerate(g.edges):
        c = 0 if colours is None else int(colours[k])
        mat[u][v] = mat[v][u] = c
    return mat


def equitable_partition(g: Graph, colours=None, initial: Sequence[int] | None = None) -> list[int]:
    """Colour refinement to a stable vertex partition.

    Cell indices are assigned by sorting signatures, so isomorphic inputs
    receive corresponding cell indices.
    """
    mat = _colour_matrix(g, colours)
    cell = list(initial) if initial is not None else [0] * g.n
    ncells = len(set(cell))
    while True:
        sigs = [(cell[v], tuple(sorted((mat[v][u], cell[u]) for u in g.adj[v]))) for v in range(g.n)]
        keys = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [keys[s] for s in sigs]
        if len(keys) == ncells:
            return new
        cell, ncells = new, len(keys)


def iter_automorphisms(g: Graph, colours=None) -> Iterator[tuple[int, ...]]:
    """Yield every automorphism of ``g`` preserving ``colours`` (per edge index).

    Images are assigned in a BFS order so each vertex after the first in its
    component has an already-mapped neighbour; candidates come from the
    mapped neighbour's neighbourhood within the same refinement cell.
    """
    n = g.n
    if n == 0:
        yield ()
        return
    mat = _colour_matrix(g, colours)
    cell = equitable_partition(g, colours)
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(cell):
        cells.setdefault(c, []).append(v)

    order = []
    placed = [False] * n
    while len(order) < n:
        start = min((v for v in range(n) if not placed[v]), key=lambda v: (len(cells[cell[v]]), v))
        placed[start] = True
        queue = [start]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in sorted(g.adj[v]):
                if not placed[u]:
                    placed[u] = True
                    queue.append(u)
    pos = {v: i for i, v in enumerate(order)}
    parent = []
    earlier = []
    for i, v in enumerate(order):
        prev = [u for u in order[:i]]
        earlier.append(prev)
        nb = [u for u in g.adj[v] if pos[u] < i]
        parent.append(min(nb, key=lambda u: pos[u]) if nb else None)

    image = [-1] * n
    used = [False] * n

    def candidates(i):
        v = order[i]
        p = parent[i]
        pool = g.adj[image[p]] if p is not None else cells[cell[v]]
        for w in sorted(pool):
            if used[w] or cell[w] != cell[v]:
                continue
            row_v, row_w = mat[v], mat[w]
            if all(row_v[u] == row_w[image[u]] for u in earlier[i]):
                yield w

    def rec(i):
        if i == n:
            yield tuple(image)
            return
        v = order[i]
        for w in candidates(i):
            image[v] = w
            used[w] = True
            yield from rec(i + 1)
            used[w] = False
        image[v] = -1

    yield from rec(0)


def automorphisms(g: Graph, cap: int | None = None, colours=None) -> PermGroup:
    cap = default_cap() if cap is None else cap
    found = []
    for p in iter_automorphisms(g, colours):
        found.append(p)
        if len(found) > cap:
            raise GroupTooLarge(f"automorphism group has more than {cap} elements")
    return PermGroup(g.n, found)


def stabilizer(grp: PermGroup, v: int) -> PermGroup:
    return grp.subgroup(grp.perms[:, v] == v)


def edge_id_matrix(g: Graph) -> np.ndarray:
    eid = np.full((g.n, g.n), -1, dtype=np.int64)
    for k, (u, v) in enumerate(g.edges):
        eid[u, v] = eid[v, u] = k
    return eid


def preserving_mask(perms: np.ndarray, g: Graph, colours, eid: np.ndarray | None = None) -> np.ndarray:
    """Boolean mask over rows of ``perms``: which permutations preserve ``colours``.

    ``colours`` is indexed by edge; ``UNCOLOURED`` entries are treated as a
    colour of their own, so partial colourings are preserved only by maps
    sending coloured edges to equally coloured edges.
    """
    if g.m == 0 or len(perms) == 0:
        return np.ones(len(perms), dtype=bool)
    eid = edge_id_matrix(g) if eid is None else eid
    col = np.asarray(colours, dtype=np.int64)
    us = np.array([e[0] for e in g.edges])
    vs = np.array([e[1] for e in g.edges])
    img = eid[perms[:, us], perms[:, vs]]
    return np.all(col[img] == col[None, :], axis=1)


def colour_preserving(grp: PermGroup, c) -> PermGroup:
    if isinstance(c, EdgeColouring):
        g, cols = c.graph, c.colours
    else:
        g, cols = c
    return grp.subgroup(preserving_mask(grp.perms, g, cols))


@dataclass(frozen=True)
class OrbitPartition:
    blocks: tuple[tuple[int, ...], ...]
    keys: tuple[tuple[int, int], ...]

    def block_of(self) -> dict[int, int]:
        return {v: i for i, b in enumerate(self.blocks) for v in b}


def vertex_orbits(grp: PermGroup, dist: Sequence[int]) -> OrbitPartition:
    """Orbits sorted by (distance to root, minimum vertex)."""
    blocks = sorted((tuple(o) for o in grp.orbits()), key=lambda b: (dist[b[0]], b[0]))
    return OrbitPartition(tuple(blocks), tuple((dist[b[0]], b[0]) for b in blocks))


def preserved_automorphism(g: Graph, c: EdgeColouring) -> tuple[int, ...] | None:
    """A non-identity automorphism preserving ``c``, or None."""
    for p in iter_automorphisms(g, c.colours):
        if not is_identity(p):
            return p
    return None


def is_distinguishing(g: Graph, c: EdgeColouring, cap: int | None = None) -> bool:
    """True iff the only colour-preserving automorphism of ``g`` is the identity.

    Searches the coloured graph directly and stops at the first non-identity
    automorphism, so the full group is never built.
    """
    if c.graph != g:
        raise ValueError("colouring belongs to a different graph")
    return preserved_automorphism(g, c) is None


def is_asymmetric(g: Graph) -> bool:
    for p in iter_automorphisms(g):
        if not is_identity(p):
            return False
    return True
