"""Seeded instance generators.  All randomness comes from :class:`XorShift64Star`."""

from __future__ import annotations

from .graph import Graph, complete_graph, disjoint_union, is_two_connected
from .rng import XorShift64Star
from .saws import Saw


def extremal_graph(p: int, r: int) -> Graph:
    """``r`` disjoint copies of ``K_p``: no cycle longer than ``p`` and independence number ``r``."""
    if p < 3 or r < 1:
        raise ValueError("need p >= 3 and r >= 1")
    return disjoint_union(*[complete_graph(p)] * r)


def clique_union_cross(sizes: list[int], m: int, rng: XorShift64Star) -> Graph:
    """Disjoint cliques of the given sizes plus ``m`` distinct random edges between cliques."""
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("clique sizes must be positive")
    g = disjoint_union(*[complete_graph(s) for s in sizes])
    owner = [i for i, s in enumerate(sizes) for _ in range(s)]
    cross = [(a, b) for a in range(g.n) for b in range(a + 1, g.n) if owner[a] != owner[b]]
    if m > len(cross) or m < 0:
        raise ValueError(f"cannot place {m} cross edges; only {len(cross)} available")
    return Graph(g.n, list(g.edges) + rng.sample(cross, m))


def two_connected_random(n: int, delta: int, rng: XorShift64Star, extra: float = 0.0) -> Graph:
    """Random Hamiltonian (hence 2-connected) graph with minimum degree exactly ``max(delta, 2)``.

    Starts from a random Hamiltonian cycle, optionally sprinkles edges with
    probability ``extra`` away from one pinned vertex, then tops up
    low-degree vertices with random new neighbours.
    """
    if n < 3 or delta > n - 1:
        raise ValueError(f"no 2-connected graph on {n} vertices with min degree {delta}")
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[(i + 1) % n]))) for i in range(n)}
    nbrs = [set() for _ in range(n)]
    for a, b in edges:
        nbrs[a].add(b)
        nbrs[b].add(a)

    def link(a, b):
        edges.add((min(a, b), max(a, b)))
        nbrs[a].add(b)
        nbrs[b].add(a)

    pinned = order[0]
    if extra > 0:
        for a in range(n):
            for b in range(a + 1, n):
                if pinned not in (a, b) and b not in nbrs[a] and rng.random() < extra:
                    link(a, b)
    while True:
        low = [w for w in range(n) if len(nbrs[w]) < delta]
        if not low:
            break
        w = low[0] if pinned not in low else pinned
        options = [z for z in range(n) if z != w and z not in nbrs[w]]
        below = [z for z in options if len(nbrs[z]) < delta]
        link(w, rng.choice(below or options))
    g = Graph(n, edges)
    assert is_two_connected(g)
    return g


def saw_tail(k: int, d: int, rng: XorShift64Star, density: float = 0.0) -> Saw:
    """A saw on ``2k+1`` vertices (backbone ``0..2k``) with degree exactly ``d``.

    ``v_{2k}`` gets exactly ``d`` neighbours and ``v_{2k+1}`` a random number in
    ``[d, 2k]``; other pairs are joined with probability ``density``.
    """
    n = 2 * k + 1
    if k < 1 or not 2 <= d <= 2 * k or (k >= 2 and d < 2):
        raise ValueError(f"infeasible saw: k={k}, d={d}")
    a, b = n - 2, n - 1  # labels of v_{2k}, v_{2k+1}
    nbrs = [set() for _ in range(n)]

    def link(x, y):
        nbrs[x].add(y)
        nbrs[y].add(x)

    for i in range(n):
        link(i, (i + 1) % n)
    for s in range(1, k + 1):
        link(2 * s - 2, 2 * s)
    if len(nbrs[b]) > d and k >= 2:
        raise ValueError(f"v_(2k+1) already has degree {len(nbrs[b])} > d={d}")
    target_b = rng.randint(max(d, len(nbrs[b])), 2 * k)
    for w, want in ((a, d), (b, target_b)):
        options = [z for z in range(n) if z != w and z not in nbrs[w] and z not in (a, b)]
        rng.shuffle(options)
        while len(nbrs[w]) < want and options:
            link(w, options.pop())
    if density > 0:
        for x in range(n - 2):
            for y in range(x + 1, n - 2):
                if y not in nbrs[x] and rng.random() < density:
                    link(x, y)
    host = Graph.from_adjacency(nbrs)
    saw = Saw(host, tuple(range(n)))
    if saw.degree != d:
        raise ValueError(f"could not reach saw degree {d} (got {saw.degree})")
    return saw
