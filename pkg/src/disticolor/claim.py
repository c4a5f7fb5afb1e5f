"""Rooted colouring procedure and the final recolouring step.

The rooted procedure colours the edges at a root ``r`` red, then repeatedly
takes the first vertex orbit (under the colour-preserving subgroup of
Aut(G, r)) that still has an uncoloured edge, colours its horizontal edges,
picks a red forward-edge count for every vertex of the orbit, and colours
the forward edges so that later orbits stay small. Groups are kept as
explicit element sets and refiltered after every step, so every invariant is
checked against the real group rather than assumed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations, product
from math import ceil

import numpy as np

from .graph import (Graph, bfs_distances, connected_components, hamiltonian_path,
                    induced_subgraph, is_complete, is_complete_bipartite_balanced,
                    regular_degree)
from .symmetry import (BLUE, RED, UNCOLOURED, EdgeColouring, PermGroup, automorphisms,
                       edge_id_matrix, is_distinguishing, preserving_mask, stabilizer,
                       vertex_orbits)

log = logging.getLogger(__name__)

LABEL_BUDGET = 200_000
REPAIR_BUDGET = 20_000


class ProcedureError(RuntimeError):
    """A procedure invariant failed; the caller falls back."""


def exception_name(g: Graph) -> str | None:
    """Name of ``g`` if it lies in {K2, K3, K4, K5, K3,3, C4, C5}, else None."""
    d = regular_degree(g)
    if d is None:
        return None
    if 2 <= g.n <= 5 and is_complete(g):
        return f"K{g.n}"
    if g.n == 4 and d == 2 and g.m == 4:
        return "C4"
    if g.n == 5 and d == 2 and g.m == 5:
        return "C5"
    if g.n == 6 and d == 3 and is_complete_bipartite_balanced(g):
        return "K3,3"
    return None


@dataclass
class OrbitProfile:
    b: int
    f: int
    h: int


@dataclass
class ClaimResult:
    colouring: EdgeColouring
    root: int
    all_red: list[int]
    trace: list[dict]
    aut: PermGroup


@dataclass
class ProcedureState:
    graph: Graph
    root: int
    delta: int
    aut: PermGroup
    aut_root: PermGroup
    colours: np.ndarray
    group: PermGroup
    orbits: list[tuple[int, ...]]
    s1: tuple[int, ...]
    trace: list[dict] = field(default_factory=list)
    debug: bool = True

    def __post_init__(self):
        self.eid = edge_id_matrix(self.graph)

    # -- basic queries

    def colour(self, u, v) -> int:
        return int(self.colours[self.eid[u, v]])

    def uncoloured_at(self, v) -> list[int]:
        return [u for u in self.graph.neighbours(v) if self.colour(v, u) == UNCOLOURED]

    def coloured_count(self, v) -> int:
        return sum(1 for u in self.graph.adj[v] if self.colour(v, u) != UNCOLOURED)

    def cursor(self) -> int | None:
        for i, block in enumerate(self.orbits):
            if any(self.uncoloured_at(v) for v in block):
                return i
        return None

    def position(self) -> dict[int, int]:
        return {v: i for i, block in enumerate(self.orbits) for v in block}

    def set_colour(self, u, v, c):
        k = self.eid[u, v]
        if self.colours[k] != UNCOLOURED:
            raise ProcedureError(f"edge {u}-{v} coloured twice")
        self.colours[k] = c

    def filter_group(self, grp: PermGroup) -> PermGroup:
        return grp.subgroup(preserving_mask(grp.perms, self.graph, self.colours, self.eid))

    def refresh(self):
        """Refilter the current group and refine the orbit order in place."""
        self.group = self.filter_group(self.group)
        self.orbits = refine_order(self.orbits, self.group)

    def colouring(self) -> EdgeColouring:
        if np.any(self.colours == UNCOLOURED):
            raise ProcedureError("colouring incomplete")
        return EdgeColouring(self.graph, tuple(int(c) for c in self.colours))


def refine_order(order, grp: PermGroup) -> list[tuple[int, ...]]:
    """Replace each block by its sub-orbits under ``grp``, in place, sorted by minimum vertex.

    Blocks of a subgroup therefore always sit inside the position of the
    block they came from, which keeps the ordering compatible across the
    nested subgroups.
    """
    orb_of = {}
    for orb in grp.orbits():
        t = tuple(orb)
        for v in orb:
            orb_of[v] = t
    out = []
    for block in order:
        subs = sorted({orb_of[v] for v in block}, key=lambda t: t[0])
        if sum(len(s) for s in subs) != len(block):
            raise ProcedureError("group orbit crosses an ordered block")
        out.extend(subs)
    return out


# ---------------------------------------------------------------- invariants

def invariant_violations(state: ProcedureState) -> list[str]:
    """Check the four procedure assumptions; return human-readable failures."""
    g = state.graph
    out = []
    cur = state.cursor()
    done = state.orbits if cur is None else state.orbits[:cur]
    done_vs = {v for b in done for v in b}
    for k, (u, v) in enumerate(g.edges):
        if state.colours[k] != UNCOLOURED and u not in done_vs and v not in done_vs:
            out.append(f"A1: edge {u}-{v} coloured beyond processed orbits")
    for b in done:
        if any(state.uncoloured_at(v) for v in b):
            out.append(f"A1: processed orbit {b} has uncoloured edges")
    if not state.group.fixes_pointwise(done_vs):
        out.append("A2: processed orbits not fixed pointwise")
    rest = [] if cur is None else state.orbits[cur:]
    for b in rest:
        if b == state.s1:
            continue
        counts = {state.coloured_count(v) for v in b}
        if len(counts) != 1:
            out.append(f"A3: orbit {b} has unequal coloured back-edge counts")
            continue
        nb = counts.pop()
        if nb >= 1 and len(b) > max(1, state.delta - nb):
            out.append(f"A3: orbit {b} of size {len(b)} with {nb} coloured back edges")
    all_red = [v for v in range(g.n)
               if not state.uncoloured_at(v) and all(state.colour(v, u) == RED for u in g.adj[v])]
    others = [v for v in all_red if v != state.root]
    if others and (len(others) > 1 or others[0] not in g.adj[state.root]):
        out.append(f"A4: all-red vertices {all_red}")
    return out


def check(state: ProcedureState, when: str):
    if not state.debug:
        return
    bad = invariant_violations(state)
    if bad:
        raise ProcedureError(f"{when}: " + "; ".join(bad))


# ---------------------------------------------------------------- labels

@dataclass
class OrbitContext:
    """Everything about the current orbit S needed to choose and check labels."""

    S: tuple[int, ...]
    profile: OrbitProfile
    components: list[list[int]]
    in_family: bool
    path_ends: list[tuple[int, int] | None]
    component_kind: str
    forward: dict[int, frozenset[int]]
    group: PermGroup  # colour-preserving group after horizontal colouring
    delta: int
    is_s1: bool


def label_violations(ctx: OrbitContext, labels: dict[int, int]) -> list[str]:
    """Literal re-check of the five label conditions."""
    f, S, delta = ctx.profile.f, ctx.S, ctx.delta
    out = []
    if any(not 0 <= labels[x] <= f for x in S):
        out.append("range")
    comp_of = {v: i for i, c in enumerate(ctx.components) for v in c}
    perms = ctx.group.perms
    for ci, comp in enumerate(ctx.components):
        moved = perms[:, comp[0]]
        for row, img0 in zip(perms, moved):
            if comp_of[int(img0)] == ci:
                continue
            if all(labels[int(row[x])] == labels[x] for x in comp):
                out.append(f"B1: component {ci} mapped to {comp_of[int(img0)]} with equal labels")
                break
    if f >= 1:
        for ends in ctx.path_ends:
            if ends is not None and labels[ends[0]] == labels[ends[1]]:
                out.append(f"B2: path ends {ends} share label")
    if f > 1:
        zeros = [x for x in S if labels[x] == 0]
        if len(zeros) > 1 or (zeros and not (len(S) >= delta - 1 or len(S) == 1)):
            out.append(f"B3: zero labels at {zeros}")
        fulls = [x for x in S if labels[x] == f]
        if len(fulls) > 1 or (fulls and not (len(S) == delta and (
                ctx.component_kind == "K1" or (ctx.component_kind == "K2" and delta == 4)))):
            out.append(f"B4: full labels at {fulls}")
        if len({ctx.forward[x] for x in S}) > 1:
            for z in fulls:
                for t in zeros:
                    if ctx.forward[z] == ctx.forward[t]:
                        out.append(f"B5: {z} and {t} share forward neighbours")
    return out


def labels_fix_orbit(ctx: OrbitContext, labels: dict[int, int]) -> bool:
    """Every group element preserving the labels fixes S pointwise."""
    S = list(ctx.S)
    perms = ctx.group.perms
    lab = np.zeros(max(max(S) + 1, perms.shape[1]), dtype=np.int64)
    for x in S:
        lab[x] = labels[x]
    keep = np.all(lab[perms[:, S]] == lab[S], axis=1)
    return bool(np.all(perms[keep][:, S] == np.asarray(S)))


def _frugal_order(f, i0):
    return sorted(range(f + 1), key=lambda l: (abs(l - i0), l))


def _component_candidates(ctx: OrbitContext, ci: int, exhaustive: bool):
    comp = ctx.components[ci]
    f = ctx.profile.f
    i0 = ceil(f / 2)
    ends = ctx.path_ends[ci]
    if exhaustive:
        vecs = list(product(range(f + 1), repeat=len(comp)))
        vecs.sort(key=lambda vec: (sum(abs(l - i0) for l in vec), vec))
        for vec in vecs:
            yield dict(zip(comp, vec))
        return
    if f == 1:
        base = {x: 0 for x in comp}
        if ends is not None:
            base[ends[0]] = 1
        yield base
        return
    base = {x: i0 for x in comp}
    if ends is not None:
        base[ends[0]] = i0 - 1
    yield base
    movable = [x for x in comp if ends is None or x != ends[0]]
    for l in _frugal_order(f, i0):
        for x in movable:
            if l != base[x]:
                cand = dict(base)
                cand[x] = l
                yield cand


def assign_labels(ctx: OrbitContext, trace: dict | None = None) -> dict[int, int]:
    """Choose red forward-edge counts for the vertices of S.

    The first component gets ``ceil(f/2)`` everywhere (one path end one
    lower); later components take the cheapest single-vertex perturbation
    that keeps every component-swapping group element broken. If that greedy
    family has no valid completion, all label vectors are searched.
    """
    f = ctx.profile.f
    if f == 0:
        return {x: 0 for x in ctx.S}
    comp_of = {v: i for i, c in enumerate(ctx.components) for v in c}
    perms = ctx.group.perms
    # cmap[g, k] = component hit by element g applied to component k
    cmap = np.array([[comp_of[int(p[c[0]])] for c in ctx.components] for p in perms])
    nodes = 0

    def b1_ok(labels, j):
        # elements sending an earlier component onto j must disagree somewhere
        for k in range(j):
            src = ctx.components[k]
            for row in perms[cmap[:, k] == j]:
                if all(labels[int(row[x])] == labels[x] for x in src):
                    return False
        return True

    def partial_ok(labels):
        if f <= 1:
            return True
        zeros = sum(1 for v in labels.values() if v == 0)
        fulls = sum(1 for v in labels.values() if v == f)
        if zeros > 1 or (zeros and not (len(ctx.S) >= ctx.delta - 1 or len(ctx.S) == 1)):
            return False
        if fulls > 1 or (fulls and not (len(ctx.S) == ctx.delta and (
                ctx.component_kind == "K1" or (ctx.component_kind == "K2" and ctx.delta == 4)))):
            return False
        return True

    def search(exhaustive, strict):
        nonlocal nodes
        labels: dict[int, int] = {}

        def rec(j):
            nonlocal nodes
            if j == len(ctx.components):
                if strict and label_violations(ctx, labels):
                    return False
                return labels_fix_orbit(ctx, labels)
            for cand in _component_candidates(ctx, j, exhaustive):
                nodes += 1
                if nodes > LABEL_BUDGET:
                    return False
                ends = ctx.path_ends[j]
                if ends is not None and cand[ends[0]] == cand[ends[1]]:
                    continue
                labels.update(cand)
                if (not strict or partial_ok(labels)) and b1_ok(labels, j) and rec(j + 1):
                    return True
                for x in cand:
                    labels.pop(x, None)
            return False

        return dict(labels) if rec(0) else None

    for exhaustive in (False, True):
        nodes = 0
        found = search(exhaustive, strict=True)
        if found is not None:
            if trace is not None:
                trace["label_mode"] = "exhaustive" if exhaustive else "greedy"
            return found
    # no vector satisfies every condition: keep the orbit-fixing ones only
    nodes = 0
    found = search(True, strict=False)
    if found is not None:
        if trace is not None:
            trace["label_mode"] = "relaxed"
            trace["label_relaxed"] = label_violations(ctx, found)
        return found
    raise ProcedureError("no valid labelling")


# ---------------------------------------------------------------- forward edges

@dataclass
class SplitPlan:
    orbits: list[tuple[int, ...]]
    a: list[int]
    d: list[int]
    m: int

    @property
    def l(self):
        return len(self.orbits)


def _split_plan(state: ProcedureState, grp: PermGroup, s_x: list[int], fwd) -> SplitPlan:
    seen = set()
    orbs = []
    for s in s_x:
        for w in fwd[s]:
            if w in seen:
                continue
            o = tuple(grp.orbit(w))
            seen.update(o)
            if len(o) > 1:
                orbs.append(o)
    orbs.sort(key=lambda o: (-len(o), o[0]))
    sx = set(s_x)
    a = [len(set().union(*(state.graph.adj[w] for w in o)) & sx) for o in orbs]
    d = [state.coloured_count(o[0]) for o in orbs]
    m = sum(1 for o, ak in zip(orbs, a) if len(o) == 2 and ak >= state.delta - 1)
    return SplitPlan(orbs, a, d, m)


def _choose_red(state: ProcedureState, grp: PermGroup, s: int, fwd_s: list[int], i: int,
                S: set[int]) -> set[int]:
    f = len(fwd_s)
    if i == f:
        return set(fwd_s)
    if i == 0:
        return set()
    orbit_of = {w: tuple(o for o in grp.orbit(w) if o in fwd_s) for w in fwd_s}
    groups = sorted({orbit_of[w] for w in fwd_s}, key=lambda o: (-len(o), o[0]))
    red_left, blue_left = i, f - i
    red, blue = set(), set()
    for o in groups:
        if len(o) < 2 or red_left == 0 or blue_left == 0:
            continue
        red.add(o[0])
        blue.add(o[1])
        red_left -= 1
        blue_left -= 1

    def at_risk(w):
        # w would end with only red edges if every remaining edge to S turned red
        if any(state.colour(w, u) == BLUE for u in state.graph.adj[w]):
            return False
        return all(u in S for u in state.uncoloured_at(w))

    rest = [w for o in groups for w in o if w not in red and w not in blue]
    risky = [w for w in rest if at_risk(w)]
    for w in risky:
        if blue_left:
            blue.add(w)
            blue_left -= 1
    rest = [w for w in rest if w not in blue]
    for w in rest:
        o = orbit_of[w]
        want_red = o.index(w) % 2 == 0
        if (want_red and red_left) or not blue_left:
            red.add(w)
            red_left -= 1
        else:
            blue.add(w)
            blue_left -= 1
    return red


def colour_forward_edges(state: ProcedureState, ctx: OrbitContext, labels: dict[int, int],
                         trace: dict) -> None:
    """Give each vertex of S exactly ``labels[x]`` red forward edges."""
    S = list(ctx.S)
    Sset = set(S)
    f = ctx.profile.f
    fwd = {x: sorted(ctx.forward[x]) for x in S}
    lab = np.zeros(state.graph.n, dtype=np.int64)
    for x in S:
        lab[x] = labels[x]
    perms = ctx.group.perms
    grp = ctx.group.subgroup(np.all(lab[perms[:, S]] == lab[S], axis=1))

    def apply(s, red):
        for w in fwd[s]:
            state.set_colour(s, w, RED if w in red else BLUE)

    forced = [x for x in S if labels[x] in (0, f)]
    for x in forced:
        apply(x, set(fwd[x]) if labels[x] == f else set())
    grp = state.filter_group(grp)
    remaining = [x for x in S if x not in forced]
    plans = []
    while remaining:
        cands = sorted(w for x in remaining for w in fwd[x])
        w0 = cands[0]
        s_x = [x for x in remaining if w0 in state.graph.adj[x]]
        plan = _split_plan(state, grp, s_x, fwd)
        if plan.m >= 2:
            first = [x for x in s_x if labels[x] < plan.l or labels[x] > f - plan.l]
            s_x = first + [x for x in s_x if x not in first]
        plans.append({"S_X": list(s_x), "X": [list(o) for o in plan.orbits],
                      "a": plan.a, "d": plan.d, "m": plan.m})
        for s in s_x:
            apply(s, _choose_red(state, grp, s, fwd[s], labels[s], Sset))
            grp = state.filter_group(grp)
            remaining.remove(s)
    trace["splits"] = plans


def _repair_forward(state: ProcedureState, ctx: OrbitContext, labels, saved, trace) -> bool:
    """Search red forward sets (respecting labels) until the invariants hold again."""
    S = list(ctx.S)
    f = ctx.profile.f
    free = [x for x in S if 0 < labels[x] < f]
    fwd = {x: sorted(ctx.forward[x]) for x in S}
    options = [list(combinations(fwd[x], labels[x])) for x in free]
    base_group, base_orbits = state.group, state.orbits
    tried = 0
    for choice in product(*options):
        tried += 1
        if tried > REPAIR_BUDGET:
            break
        state.colours[:] = saved
        for x in S:
            red = set(fwd[x]) if labels[x] == f else set()
            if x in free:
                red = set(choice[free.index(x)])
            for w in fwd[x]:
                state.colours[state.eid[x, w]] = RED if w in red else BLUE
        state.group, state.orbits = base_group, base_orbits
        state.refresh()
        if not invariant_violations(state):
            trace["repair"] = tried
            return True
    state.group, state.orbits = base_group, base_orbits
    return False


# ---------------------------------------------------------------- procedure

def _horizontal_colouring(H: Graph, name: str | None):
    """Colouring of one horizontal component and, for family members, its path ends."""
    if H.m == 0:
        return {}, None
    if name is not None:
        path = hamiltonian_path(H)
        blue = {tuple(sorted(e)) for e in zip(path, path[1:])}
        return {e: BLUE if e in blue else RED for e in H.edges}, (path[0], path[-1])
    from .engine import distinguishing_two_colouring
    rep = distinguishing_two_colouring(H)
    return dict(zip(H.edges, rep.colouring.colours)), None


def process_orbit(state: ProcedureState) -> bool:
    """Colour every uncoloured edge at the first orbit that still has one.

    Returns False once the colouring is complete.
    """
    cur = state.cursor()
    if cur is None:
        return False
    check(state, "before orbit")
    g = state.graph
    S = state.orbits[cur]
    pos = state.position()
    rec: dict = {"orbit": list(S)}
    orbits_before = list(state.orbits)

    profiles = set()
    forward = {}
    for x in S:
        b = sum(1 for u in g.adj[x] if pos[u] < cur)
        h = sum(1 for u in g.adj[x] if pos[u] == cur)
        fw = frozenset(u for u in g.adj[x] if pos[u] > cur)
        forward[x] = fw
        profiles.add((b, len(fw), h))
    if len(profiles) != 1:
        raise ProcedureError(f"orbit {S} has non-constant edge profile")
    b, f, h = profiles.pop()
    prof = OrbitProfile(b, f, h)
    rec["profile"] = {"b": b, "f": f, "h": h}
    if b < 1:
        raise ProcedureError(f"orbit {S} has no back edge")

    # horizontal edges
    comps = connected_components(g, S)
    base_graph, base_map = induced_subgraph(g, comps[0])
    name = exception_name(base_graph)
    kind = "K1" if len(comps[0]) == 1 else (name or f"n{len(comps[0])}d{h}")
    base_cols, base_ends = _horizontal_colouring(base_graph, name)
    inv_base = {i: v for v, i in base_map.items()}
    base_edge_cols = {(inv_base[u], inv_base[v]): c for (u, v), c in base_cols.items()}
    path_ends: list[tuple[int, int] | None] = []
    for comp in comps:
        perms = state.group.perms
        hits = np.nonzero(np.isin(perms[:, comps[0][0]], comp))[0]
        if len(hits) == 0:
            raise ProcedureError("components of an orbit are not equivalent")
        p = perms[hits[0]]
        for (u, v), c in base_edge_cols.items():
            state.set_colour(int(p[u]), int(p[v]), c)
        if base_ends is not None:
            path_ends.append((int(p[inv_base[base_ends[0]]]), int(p[inv_base[base_ends[1]]])))
        else:
            path_ends.append(None)
    rec["components"] = [list(c) for c in comps]
    rec["component_kind"] = kind
    if base_ends is not None:
        rec["path_ends"] = path_ends
    group_h = state.filter_group(state.group)

    ctx = OrbitContext(S=tuple(S), profile=prof, components=comps, in_family=name is not None,
                       path_ends=path_ends, component_kind=kind, forward=forward,
                       group=group_h, delta=state.delta, is_s1=(S == state.s1))
    if f == 0:
        labels = {x: 0 for x in S}
    else:
        labels = assign_labels(ctx, rec)
        rec["labels"] = {int(x): int(labels[x]) for x in S}
        if rec.get("label_mode") != "relaxed":
            bad = label_violations(ctx, labels)
            if bad:
                raise ProcedureError("labelling check failed: " + "; ".join(bad))
        saved = state.colours.copy()
        colour_forward_edges(state, ctx, labels, rec)
    state.refresh()
    bad = invariant_violations(state) if state.debug else []
    if bad and f > 0:
        rec["greedy_violation"] = bad
        state.colours[:] = saved
        state.group = group_h
        state.orbits = refine_order(orbits_before, group_h)
        if not _repair_forward(state, ctx, labels, saved, rec):
            raise ProcedureError(f"after orbit {S}: " + "; ".join(bad))
    check(state, f"after orbit {list(S)}")
    state.trace.append(rec)
    return True


def initial_state(g: Graph, r: int, aut: PermGroup | None = None, cap: int | None = None,
                  debug: bool = True) -> ProcedureState:
    delta = regular_degree(g)
    if delta is None:
        raise ValueError("graph is not regular")
    aut = automorphisms(g, cap) if aut is None else aut
    aut_r = stabilizer(aut, r)
    dist = bfs_distances(g, r)
    s0 = vertex_orbits(aut_r, dist)
    colours = np.full(g.m, UNCOLOURED, dtype=np.int64)
    state = ProcedureState(graph=g, root=r, delta=delta, aut=aut, aut_root=aut_r,
                           colours=colours, group=aut_r, orbits=list(s0.blocks),
                           s1=s0.blocks[1] if len(s0.blocks) > 1 else (), debug=debug)
    for u in g.adj[r]:
        state.set_colour(r, u, RED)
    state.refresh()
    state.trace.append({"orbit": [r], "root": True, "S0": [list(b) for b in s0.blocks]})
    return state


def all_red_vertices(c: EdgeColouring) -> list[int]:
    g = c.graph
    return [v for v in range(g.n) if g.adj[v] and all(c[(v, u)] == RED for u in g.adj[v])]


def claim_violations(c: EdgeColouring, r: int, aut_root: PermGroup) -> list[str]:
    """Check the three rooted-claim properties directly."""
    g = c.graph
    out = []
    kept = aut_root.subgroup(preserving_mask(aut_root.perms, g, c.colours))
    if not kept.is_trivial():
        out.append(f"(i): {kept.order} colour-preserving automorphisms fix the root")
    reds = all_red_vertices(c)
    if r not in reds or len(reds) > 2 or (len(reds) == 2 and not any(v in g.adj[r] for v in reds if v != r)):
        out.append(f"(ii): all-red vertices {reds}")
    if len(reds) == 2:
        degs = {c.degree_in(u, RED) for u in g.adj[r]}
        missing = [k for k in range(1, len(g.adj[r]) + 1) if k not in degs]
        if missing:
            out.append(f"(iii): no neighbour of the root has red degree {missing}")
    return out


def rooted_claim_colouring(g: Graph, r: int = 0, aut: PermGroup | None = None,
                           cap: int | None = None, debug: bool = True) -> ClaimResult:
    delta = regular_degree(g)
    if delta is None or delta < 4:
        raise ValueError("rooted procedure needs a regular graph of degree at least 4")
    if is_complete(g) or is_complete_bipartite_balanced(g):
        raise ValueError("rooted procedure excludes complete and complete bipartite graphs")
    state = initial_state(g, r, aut, cap, debug)
    check(state, "initial")
    while process_orbit(state):
        pass
    c = state.colouring()
    bad = claim_violations(c, r, state.aut_root)
    if bad:
        raise ProcedureError("claim check failed: " + "; ".join(bad))
    return ClaimResult(c, r, all_red_vertices(c), state.trace, state.aut)


# ---------------------------------------------------------------- finalisation

def finalize_recolouring(claim: ClaimResult) -> tuple[EdgeColouring, dict]:
    """Turn the rooted colouring into one that also fixes the root."""
    c, r = claim.colouring, claim.root
    g = c.graph
    info: dict = {"all_red": list(claim.all_red)}
    others = [v for v in claim.all_red if v != r]
    if not others:
        info["case"] = "unique"
        return c, info
    x = others[0]
    if not np.any(claim.aut.perms[:, r] == x):
        info["case"] = "root-not-movable"
        return c, info
    ys = [u for u in g.adj[x] if c.degree_in(u, BLUE) == 1]
    if len(ys) == 1:
        y = ys[0]
        if y in g.adj[r]:
            info.update(case=1, x=x, y=y)
            return c.recoloured((y, r), BLUE), info
        z = next(u for u in g.adj[y] if c[(y, u)] == BLUE)
        k = c.degree_in(z, BLUE)
        for w in sorted(g.adj[r]):
            if w not in (x, z) and c.degree_in(w, BLUE) != k - 1:
                info.update(case=2, x=x, y=y, z=z, k=k, w=w)
                return c.recoloured((r, w), BLUE), info
    # no usable y: try each single root edge, keeping the first that fixes r
    for w in sorted(g.adj[r]):
        if w == x:
            continue
        cand = c.recoloured((r, w), BLUE)
        if is_distinguishing(g, cand):
            info.update(case="root-edge-scan", x=x, y_candidates=ys, w=w)
            return cand, info
    raise ProcedureError(f"no single root-edge recolouring fixes the root (x={x}, y candidates {ys})")
