import itertools

import networkx as nx
from hypothesis import strategies as st

from cycleramsey.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def brute_alpha(g: Graph) -> int:
    best = 0
    for mask in range(1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        if len(vs) > best and all(not g.has_edge(a, b) for a, b in itertools.combinations(vs, 2)):
            best = len(vs)
    return best


def glued_cliques(rng, sizes, attach, bridges):
    """Cliques of the given sizes; the first is joined to the rest with probability
    ``attach`` per pair, and ``bridges`` random edges link the other cliques."""
    off = [0]
    for s in sizes:
        off.append(off[-1] + s)
    edges = {(a, b) for i in range(len(sizes)) for a in range(off[i], off[i + 1]) for b in range(a + 1, off[i + 1])}
    for a in range(off[0], off[1]):
        for b in range(off[1], off[-1]):
            if rng.random() < attach:
                edges.add((a, b))
    others = [(i, j) for i in range(1, len(sizes)) for j in range(i + 1, len(sizes))]
    for _ in range(bridges if others else 0):
        i, j = rng.choice(others)
        edges.add((rng.randint(off[i], off[i + 1] - 1), rng.randint(off[j], off[j + 1] - 1)))
    return Graph(off[-1], edges), off


ACCEPTANCE_LINES: dict[int, str] = {}


def record_acceptance(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})"
    ACCEPTANCE_LINES[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])
