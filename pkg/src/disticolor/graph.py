"""Simple undirected graphs, graph6 I/O, family generators and elementary queries.

Vertices are ``0..n-1``. Edges are stored canonically as ``(u, v)`` with
``u < v`` and listed in lexicographic order; that order is the edge index
used by colourings throughout the package.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

MAX_GRAPH6_N = 62


class GraphError(ValueError):
    """Invalid graph input or parameters."""


class Graph6Error(GraphError):
    pass


class GenerationFailed(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]
    edges: tuple[tuple[int, int], ...] = field(init=False, repr=False, compare=False)
    edge_index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        for v, nb in enumerate(self.adj):
            if v in nb:
                raise GraphError(f"loop at vertex {v}")
            for u in nb:
                if not 0 <= u < self.n or v not in self.adj[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        edges = tuple((u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "edge_index", {e: i for i, e in enumerate(edges)})

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        nb = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if v in nb[u]:
                raise GraphError(f"multi-edge ({u}, {v})")
            nb[u].add(v)
            nb[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nb))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbours(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edge_id(self, u: int, v: int) -> int:
        return self.edge_index[(u, v) if u < v else (v, u)]

    def __str__(self):
        return f"Graph(n={self.n}, m={self.m})"


def canonical_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


# ---------------------------------------------------------------- graph6

def _pair_order(n):
    # upper triangle, column-major: (0,1) (0,2) (1,2) (0,3) ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= d <= 63 for d in data):
        raise Graph6Error(f"byte out of printable range in {s!r}")
    if data[0] == 63:
        raise Graph6Error("multi-byte graph6 headers (n > 62) are not supported")
    n = data[0]
    body = data[1:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(body)}")
    bits = []
    for d in body:
        bits.extend((d >> (5 - k)) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    edges = [pair for pair, bit in zip(_pair_order(n), bits) if bit]
    return Graph.from_edges(n, edges)


def write_graph6(g: Graph) -> str:
    if not 1 <= g.n <= MAX_GRAPH6_N:
        raise Graph6Error(f"graph6 writer supports 1 <= n <= {MAX_GRAPH6_N}, got {g.n}")
    bits = [1 if g.has_edge(i, j) else 0 for i, j in _pair_order(g.n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


# ---------------------------------------------------------------- families

FAMILIES = ("complete", "complete_bipartite", "cycle", "circulant", "petersen",
            "hypercube", "prism", "random_regular")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()
    seed: int | None = None


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """Parts are ``0..a-1`` and ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise GraphError("complete bipartite graph needs both parts non-empty")
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def cycle_graph(n: int) -> Graph:
    """Edges ``(i, i+1 mod n)``."""
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def circulant(n: int, offsets: Iterable[int]) -> Graph:
    offs = set()
    for d in offsets:
        d %= n
        if d == 0:
            raise GraphError("circulant offset must be nonzero mod n")
        offs.add(min(d, n - d))
    edges = {canonical_edge(i, (i + d) % n) for i in range(n) for d in offs}
    return Graph.from_edges(n, sorted(edges))


def petersen() -> Graph:
    """Kneser graph K(5,2); vertex i is the i-th 2-subset of {0..4} in lex order."""
    subsets = list(combinations(range(5), 2))
    edges = [(i, j) for i, j in combinations(range(10), 2)
             if not set(subsets[i]) & set(subsets[j])]
    return Graph.from_edges(10, edges)


def hypercube(d: int) -> Graph:
    """Vertices are bit strings; adjacent when they differ in one bit."""
    if d < 1:
        raise GraphError("hypercube needs dimension >= 1")
    n = 1 << d
    return Graph.from_edges(n, ((v, v ^ (1 << k)) for v in range(n) for k in range(d) if v < v ^ (1 << k)))


def prism(k: int) -> Graph:
    """C_k x K_2: outer cycle ``0..k-1``, inner cycle ``k..2k-1``, spokes ``i -- k+i``."""
    if k < 3:
        raise GraphError("prism needs k >= 3")
    edges = []
    for i in range(k):
        edges.append((i, (i + 1) % k))
        edges.append((k + i, k + (i + 1) % k))
        edges.append((i, k + i))
    return Graph.from_edges(2 * k, [canonical_edge(*e) for e in edges])


def random_regular(n: int, d: int, seed: int | None = None, max_tries: int = 10_000) -> Graph:
    """Connected simple d-regular graph from the pairing model.

    Points are paired one random valid pair at a time (no loops, no repeated
    edges); a pairing that gets stuck, or a disconnected result, is discarded
    and redrawn. Deterministic for a given seed.
    """
    if d < 1 or d >= n or (n * d) % 2:
        raise GraphError(f"no {d}-regular graph on {n} vertices")
    rng = random.Random(seed)
    for _ in range(max_tries):
        points = [v for v in range(n) for _ in range(d)]
        edges = set()
        while points:
            valid = [(i, j) for i in range(len(points)) for j in range(i + 1, len(points))
                     if points[i] != points[j] and canonical_edge(points[i], points[j]) not in edges]
            if not valid:
                break
            i, j = valid[rng.randrange(len(valid))]
            edges.add(canonical_edge(points[i], points[j]))
            del points[j], points[i]
        if points:
            continue
        g = Graph.from_edges(n, sorted(edges))
        if is_connected(g):
            return g
    raise GenerationFailed(f"random_regular({n}, {d}) failed after {max_tries} pairings")


def generate(spec: FamilySpec) -> Graph:
    p = list(spec.params)

    def need(k):
        if len(p) < k:
            raise GraphError(f"family {spec.family!r} needs {k} parameter(s)")

    fam = spec.family
    if fam == "complete":
        need(1)
        return complete_graph(p[0])
    if fam == "complete_bipartite":
        need(1)
        return complete_bipartite(p[0], p[1] if len(p) > 1 else p[0])
    if fam == "cycle":
        need(1)
        return cycle_graph(p[0])
    if fam == "circulant":
        need(2)
        return circulant(p[0], p[1:])
    if fam == "petersen":
        return petersen()
    if fam == "hypercube":
        need(1)
        return hypercube(p[0])
    if fam == "prism":
        need(1)
        return prism(p[0])
    if fam == "random_regular":
        need(2)
        return random_regular(p[0], p[1], spec.seed)
    raise GraphError(f"unknown family {fam!r}; expected one of {', '.join(FAMILIES)}")


# ---------------------------------------------------------------- queries

def bfs_distances(g: Graph, root: int) -> list[int]:
    dist = [-1] * g.n
    dist[root] = 0
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in sorted(g.adj[v]):
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    if min(dist) < 0:
        raise GraphError("graph is disconnected: some vertex unreachable from root")
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    try:
        bfs_distances(g, 0)
    except GraphError:
        return False
    return True


def regular_degree(g: Graph) -> int | None:
    degs = {len(nb) for nb in g.adj}
    if len(degs) == 1:
        return degs.pop()
    return None


def induced_subgraph(g: Graph, vs: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    order = sorted(set(vs))
    mapping = {v: i for i, v in enumerate(order)}
    edges = [(mapping[u], mapping[v]) for u, v in g.edges if u in mapping and v in mapping]
    return Graph.from_edges(len(order), edges), mapping


def connected_components(g: Graph, vs: Iterable[int] | None = None) -> list[list[int]]:
    """Components of ``g[vs]`` as sorted vertex lists, ordered by minimum vertex."""
    allowed = set(range(g.n)) if vs is None else set(vs)
    seen = set()
    comps = []
    for s in sorted(allowed):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if u in allowed and u not in seen:
                    seen.add(u)
                    comp.append(u)
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def hamiltonian_path(g: Graph) -> list[int] | None:
    """Lexicographically least Hamiltonian path, by plain backtracking."""
    n = g.n
    if n == 0:
        return []
    nbrs = [sorted(nb) for nb in g.adj]
    path = []
    used = [False] * n

    def extend(v):
        path.append(v)
        used[v] = True
        if len(path) == n:
            return True
        for u in nbrs[v]:
            if not used[u] and extend(u):
                return True
        path.pop()
        used[v] = False
        return False

    for start in range(n):
        if extend(start):
            return path
    return None


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    """Two colour classes of a connected bipartite graph, or None."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    return ([v for v in range(g.n) if side[v] == 0],
            [v for v in range(g.n) if side[v] == 1])


def is_complete_bipartite_balanced(g: Graph) -> bool:
    """True for K_{k,k}, k >= 1."""
    if g.n % 2 or g.n == 0:
        return False
    k = g.n // 2
    parts = bipartition(g)
    return parts is not None and len(parts[0]) == k and g.m == k * k


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and regular_degree(g) == 2 and is_connected(g)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the vertex map ``v -> perm[v]``."""
    return Graph.from_edges(g.n, (canonical_edge(perm[u], perm[v]) for u, v in g.edges))
