"""Distinguishing 2-edge-colourings of connected regular graphs.

Dispatch: exception family, cycles, cubic graphs (search), complete graphs,
balanced complete bipartite graphs, and the rooted procedure of
:mod:`disticolor.claim` for everything else. Every colouring leaving
:func:`distinguishing_two_colouring` has been checked by the verifier.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .claim import (ProcedureError, exception_name, finalize_recolouring,
                    rooted_claim_colouring)
from .graph import (Graph, bipartition, canonical_edge, complete_bipartite, complete_graph,
                    cycle_graph, is_complete, is_complete_bipartite_balanced, is_connected,
                    regular_degree)
from .oracle import BudgetExceeded, complete_graph_search, find_distinguishing_colouring
from .symmetry import (BLUE, RED, EdgeColouring, GroupTooLarge, automorphisms,
                       is_asymmetric, is_distinguishing)

log = logging.getLogger(__name__)

METHODS = ("exception", "base-cycle", "base-cubic-search", "complete-graph",
           "complete-bipartite", "claim-procedure", "search-fallback")


class EngineError(RuntimeError):
    pass


class ExceptionGraph(EngineError):
    """The graph has no distinguishing 2-colouring (or the index is undefined)."""


class NotRegular(EngineError):
    pass


class NotConnected(EngineError):
    pass


@dataclass
class ColouringReport:
    method: str
    colouring: EdgeColouring
    verified: bool
    group_order: int | None = None
    root: int | None = None
    trace: list = field(default_factory=list)
    fallback_reason: str | None = None
    finalize: dict | None = None


# ---------------------------------------------------------------- constructions

def cycle_colouring(n: int) -> EdgeColouring:
    """Blue on e0, e2, e3 of C_n (e_i = i -- i+1), red elsewhere."""
    if n < 6:
        raise ExceptionGraph(f"C{n} has no distinguishing 2-colouring" if n in (3, 4, 5)
                             else f"cycle needs n >= 6, got {n}")
    g = cycle_graph(n)
    blue = {canonical_edge(i, (i + 1) % n) for i in (0, 2, 3)}
    return EdgeColouring(g, tuple(BLUE if e in blue else RED for e in g.edges))


def _cycle_walk(g: Graph) -> list[int]:
    """Vertices of a cycle in traversal order from 0 towards its smaller neighbour."""
    walk = [0]
    prev = None
    while len(walk) < g.n:
        cur = walk[-1]
        nxt = min(u for u in g.adj[cur] if u != prev)
        walk.append(nxt)
        prev = cur
    return walk


def _transport(c: EdgeColouring, g: Graph, perm) -> EdgeColouring:
    """Colouring of ``g`` from ``c`` on an isomorphic graph, via ``perm``: c.graph vertex -> g vertex."""
    cols = {canonical_edge(perm[u], perm[v]): col for (u, v), col in zip(c.graph.edges, c.colours)}
    return EdgeColouring(g, tuple(cols[e] for e in g.edges))


def complete_graph_colouring(n: int) -> EdgeColouring:
    """Red = path 0..n-1 plus chord 1-3 (an asymmetric spanning subgraph), blue elsewhere."""
    if n < 6:
        raise ExceptionGraph(f"K{n} has no distinguishing 2-colouring" if n >= 2
                             else "complete graph colouring needs n >= 6")
    g = complete_graph(n)
    red = {(i, i + 1) for i in range(n - 1)} | {(1, 3)}
    if is_asymmetric(Graph.from_edges(n, sorted(red))):
        return EdgeColouring(g, tuple(RED if e in red else BLUE for e in g.edges))
    c = complete_graph_search(g)
    if c is None:
        raise EngineError(f"no asymmetric spanning subgraph on {n} vertices")
    return c


def complete_bipartite_colouring(n: int) -> EdgeColouring:
    """K_{n,n} with parts a_i = i and b_i = n + i.

    Blue is the spider centred at a_2 with legs a_2-b_1-a_1, a_2-b_n and
    a_2-b_2-a_3-...-a_n: a spanning tree whose legs have lengths 2, 1 and
    2n-4, all distinct once n >= 4, so it is asymmetric. Any colour-preserving
    automorphism of K_{n,n} is an automorphism of this tree, hence trivial.
    """
    if n <= 3:
        raise ExceptionGraph(f"K{n},{n} has no distinguishing 2-colouring")
    g = complete_bipartite(n, n)
    a = lambda i: i - 1
    b = lambda i: n + i - 1
    blue = [(a(1), b(1)), (b(1), a(2)), (a(2), b(n))]
    chain = [a(2)]
    for i in range(2, n):
        chain += [b(i), a(i + 1)]
    blue += list(zip(chain, chain[1:]))
    blue = {canonical_edge(*e) for e in blue}
    c = EdgeColouring(g, tuple(BLUE if e in blue else RED for e in g.edges))
    if not is_distinguishing(g, c):
        c = find_distinguishing_colouring(g, 2)
        if c is None:
            raise EngineError(f"no distinguishing colouring of K{n},{n}")
    return c


# ---------------------------------------------------------------- dispatch

def _verify(g, c, cap):
    return c.num_colours <= 2 and is_distinguishing(g, c, cap)


def distinguishing_two_colouring(g: Graph, cap: int | None = None, root: int | None = None,
                                 debug: bool = True, budget: int = 10 ** 8) -> ColouringReport:
    """Distinguishing colouring of ``g`` with red and blue.

    Raises :class:`ExceptionGraph` for K2..K5, K3,3, C4 and C5, and
    :class:`NotConnected` / :class:`NotRegular` for invalid input.
    """
    if not is_connected(g):
        raise NotConnected("graph is not connected")
    delta = regular_degree(g)
    if delta is None:
        raise NotRegular("graph is not regular")
    if g.n == 1:
        return ColouringReport("exception", EdgeColouring(g, ()), True, 1)
    name = exception_name(g)
    if name is not None:
        raise ExceptionGraph(f"{name} has no distinguishing 2-colouring"
                             + (" (index undefined)" if name == "K2" else ""))

    if delta == 2:
        walk = _cycle_walk(g)
        c = _transport(cycle_colouring(g.n), g, walk)
        return _finish(g, c, "base-cycle", cap)
    if is_complete(g):
        return _finish(g, complete_graph_colouring(g.n), "complete-graph", cap)
    if is_complete_bipartite_balanced(g):
        left, right = bipartition(g)
        perm = left + right
        c = _transport(complete_bipartite_colouring(delta), g, perm)
        return _finish(g, c, "complete-bipartite", cap)
    if delta == 3:
        try:
            c = find_distinguishing_colouring(g, 2, budget, cap)
        except (BudgetExceeded, GroupTooLarge) as exc:
            raise EngineError(f"cubic search failed: {exc}") from exc
        if c is None:
            raise EngineError("cubic graph outside the exception family has no 2-colouring")
        return _finish(g, c, "base-cubic-search", cap)

    return _claim_dispatch(g, cap, root, debug, budget)


def _finish(g, c, method, cap, **extra) -> ColouringReport:
    if not _verify(g, c, cap):
        raise EngineError(f"{method} produced a colouring that fails verification")
    return ColouringReport(method, c, True, **extra)


def _claim_dispatch(g, cap, root, debug, budget) -> ColouringReport:
    try:
        aut = automorphisms(g, cap)
    except GroupTooLarge as exc:
        return _fallback(g, cap, budget, str(exc))
    roots = list(range(g.n))
    if root is not None:
        roots.remove(root)
        roots.insert(0, root)
    reasons = []
    for r in roots:
        try:
            claim = rooted_claim_colouring(g, r, aut=aut, debug=debug)
            c, info = finalize_recolouring(claim)
        except ProcedureError as exc:
            log.info("root %d: %s", r, exc)
            reasons.append(f"root {r}: {exc}")
            continue
        if _verify(g, c, cap):
            return ColouringReport("claim-procedure", c, True, aut.order, r, claim.trace,
                                   finalize=info)
        reasons.append(f"root {r}: final colouring not distinguishing ({info})")
    return _fallback(g, cap, budget, " | ".join(reasons), aut)


def _fallback(g, cap, budget, reason, aut=None) -> ColouringReport:
    log.warning("search fallback: %s", reason)
    try:
        c = find_distinguishing_colouring(g, 2, budget, cap, group=aut)
    except (BudgetExceeded, GroupTooLarge) as exc:
        raise EngineError(f"fallback search failed: {exc}; after: {reason}") from exc
    if c is None:
        raise EngineError(f"no distinguishing 2-colouring found; after: {reason}")
    return _finish(g, c, "search-fallback", cap,
                   group_order=None if aut is None else aut.order, fallback_reason=reason)
