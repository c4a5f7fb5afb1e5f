from itertools import combinations

from hypothesis import strategies as st

from disticolor.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def brute_automorphisms(g):
    """Every vertex permutation preserving adjacency, by full enumeration."""
    from itertools import permutations
    es = set(g.edges)
    out = []
    for p in permutations(range(g.n)):
        if all(((p[u], p[v]) if p[u] < p[v] else (p[v], p[u])) in es for u, v in g.edges):
            out.append(p)
    return out


# criterion number -> (passed, detail), filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
