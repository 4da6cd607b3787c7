"""Long paths between prescribed endpoints under minimum-degree conditions.

All three entry points guarantee a u-v path of order at least ``delta + 1``.
They run a depth-first threshold search that stops at the first path long
enough; :func:`path_avoiding` always goes through the mirror-doubled graph,
and :func:`path_one_exception` falls back to the cycle-plus-two-paths
assembly when the direct search exhausts its node budget.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .errors import NotFound, PreconditionViolated
from .graph import Graph, Path, components, is_two_connected

DEFAULT_BUDGET = 200_000


class _BudgetExceeded(Exception):
    pass


def search_path(
    g: Graph,
    u: int,
    v: int,
    target: int,
    within: Iterable[int] | None = None,
    budget: int | None = None,
) -> list[int] | None:
    """A u-v path of order >= ``target`` inside ``within``, or None if none exists.

    Raises ``_BudgetExceeded`` after ``budget`` search nodes.
    """
    allowed = set(range(g.n)) if within is None else set(within)
    if u == v or u not in allowed or v not in allowed:
        return None
    path = [u]
    used = {u}
    count = [0]

    def reach(x: int) -> int:
        # free vertices reachable from x (v counted, v not expanded); -1 if v unreachable
        seen = set()
        stack = [x]
        hit = False
        while stack:
            y = stack.pop()
            for z in g.adj[y]:
                if z == v:
                    hit = True
                    continue
                if z in allowed and z not in used and z not in seen:
                    seen.add(z)
                    stack.append(z)
        return len(seen) + 1 if hit else -1

    def free_degree(y: int) -> int:
        return sum(1 for z in g.adj[y] if z in allowed and z not in used)

    def rec() -> bool:
        count[0] += 1
        if budget is not None and count[0] > budget:
            raise _BudgetExceeded
        x = path[-1]
        r = reach(x)
        if r < 0 or len(path) + r < target:
            return False
        if v in g.adj[x] and len(path) + 1 >= target:
            path.append(v)
            return True
        nxt = [y for y in g.adj[x] if y != v and y in allowed and y not in used]
        nxt.sort(key=lambda y: (free_degree(y), y))
        for y in nxt:
            path.append(y)
            used.add(y)
            if rec():
                return True
            path.pop()
            used.discard(y)
        return False

    return list(path) if rec() else None


def search_cycle(
    g: Graph, target: int, within: Iterable[int] | None = None, budget: int | None = None
) -> list[int] | None:
    """A cycle of order >= ``target`` (at least 3) inside ``within``, or None."""
    allowed = set(range(g.n)) if within is None else set(within)
    target = max(3, target)
    for s in sorted(allowed):
        for t in sorted(g.adj[s] & allowed):
            if t < s:
                continue
            p = search_path(g, s, t, target, allowed - {w for w in allowed if w < s}, budget)
            if p is not None:
                return p
    return None


def disjoint_paths_to(
    g: Graph, sources: list[int], targets: Iterable[int], within: Iterable[int] | None = None
) -> list[list[int]] | None:
    """Vertex-disjoint paths, one from each source, ending at distinct target vertices.

    Each path stops at its first target vertex.  Unit-capacity max flow on the
    vertex-split graph; returns None if fewer paths exist than sources.
    """
    allowed = set(range(g.n)) if within is None else set(within)
    tset = set(targets) & allowed
    src, snk = ("s",), ("t",)
    cap: dict = {}
    nbr: dict = {}

    def add(a, b):
        cap[(a, b)] = cap.get((a, b), 0) + 1
        cap.setdefault((b, a), 0)
        nbr.setdefault(a, []).append(b)
        nbr.setdefault(b, []).append(a)

    for w in sorted(allowed):
        add((w, 0), (w, 1))
        if w in tset:
            add((w, 1), snk)
        for z in sorted(g.adj[w] & allowed):
            add((w, 1), (z, 0))
    for s in sources:
        if s not in allowed:
            return None
        add(src, (s, 0))

    flow = 0
    while flow < len(sources):
        prev = {src: None}
        dq = deque([src])
        while dq and snk not in prev:
            a = dq.popleft()
            for b in nbr.get(a, ()):
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    dq.append(b)
        if snk not in prev:
            return None
        b = snk
        while prev[b] is not None:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1

    paths = []
    for s in sources:
        walk = [s]
        node = (s, 0)
        while True:
            w = node[0]
            if w in tset:
                break
            # follow saturated forward arcs: (w,0)->(w,1)->(z,0)
            out = (w, 1)
            step = None
            for b in nbr[out]:
                if b != (w, 0) and b != snk and cap[(b, out)] > 0 and cap[(out, b)] == 0:
                    step = b
                    break
            if step is None:
                return None
            cap[(step, out)] -= 1
            node = step
            walk.append(step[0])
        paths.append(walk)
    return paths


def _check_two_connected(g: Graph):
    if not is_two_connected(g):
        raise PreconditionViolated("graph is not 2-connected")


def _check_degrees(g: Graph, delta: int, exempt: Iterable[int]):
    ex = set(exempt)
    for w in range(g.n):
        if w not in ex and g.degree(w) < delta:
            raise PreconditionViolated(f"vertex {w} has degree {g.degree(w)} < {delta}")


def path_at_least(
    g: Graph, u: int, v: int, delta: int, strict: bool = True, budget: int | None = DEFAULT_BUDGET
) -> Path:
    """A u-v path of order at least ``delta + 1`` in a 2-connected graph.

    Requires ``d(w) >= delta`` for every ``w`` other than ``u`` and ``v``.
    """
    if u == v:
        raise ValueError("endpoints must differ")
    if strict:
        _check_two_connected(g)
        _check_degrees(g, delta, (u, v))
    try:
        p = search_path(g, u, v, delta + 1, budget=budget)
    except _BudgetExceeded:
        raise NotFound(f"search budget {budget} exhausted for {u}-{v} path of order {delta + 1}") from None
    if p is None:
        raise NotFound(f"no {u}-{v} path of order >= {delta + 1}")
    return Path(p)


def mirror_double(g: Graph, u: int, v: int, keep: Iterable[int]) -> tuple[Graph, list[int]]:
    """``g[keep]`` glued to a second copy of itself along ``u`` and ``v``.

    Returns the doubled graph and the projection from its vertices back to
    labels of ``g``.
    """
    keep = sorted(set(keep) | {u, v})
    index = {w: i for i, w in enumerate(keep)}
    inner = [w for w in keep if w not in (u, v)]
    twin = {w: len(keep) + i for i, w in enumerate(inner)}
    proj = list(keep) + inner
    edges = set()
    for a, b in g.edges:
        if a in index and b in index:
            edges.add((index[a], index[b]))
            ca = index[a] if a in (u, v) else twin[a]
            cb = index[b] if b in (u, v) else twin[b]
            edges.add((min(ca, cb), max(ca, cb)))
    return Graph(len(proj), edges), proj


def path_avoiding(
    g: Graph,
    u: int,
    v: int,
    avoid: Iterable[int],
    delta: int,
    strict: bool = True,
    budget: int | None = DEFAULT_BUDGET,
) -> Path:
    """A u-v path of order at least ``delta + 1`` that misses ``avoid``.

    ``g - u - v`` must split into ``avoid`` and a nonempty remainder with no
    edges between them.
    """
    avoid = set(avoid)
    if strict:
        _check_two_connected(g)
        _check_degrees(g, delta, (u, v))
        rest = set(range(g.n)) - avoid - {u, v}
        if not avoid or not rest or u in avoid or v in avoid:
            raise PreconditionViolated("avoid and its complement in g-u-v must both be nonempty")
        if any(g.adj[w] & rest for w in avoid):
            raise PreconditionViolated("avoid is not a union of components of g-u-v")
    keep = set(range(g.n)) - avoid
    doubled, proj = mirror_double(g, u, v, keep)
    iu, iv = proj.index(u), proj.index(v)
    p = path_at_least(doubled, iu, iv, delta, strict=False, budget=budget)
    return Path(tuple(proj[w] for w in p.vertices))


def _longer_arc(cycle: list[int], a: int, b: int) -> list[int]:
    """The longer of the two a-b arcs of ``cycle``, listed from a to b."""
    n = len(cycle)
    i, j = cycle.index(a), cycle.index(b)
    fwd = [cycle[(i + t) % n] for t in range((j - i) % n + 1)]
    bwd = [cycle[(i - t) % n] for t in range((i - j) % n + 1)]
    return fwd if len(fwd) >= len(bwd) else bwd


def _through_cycle(g: Graph, u: int, v: int, cycle: list[int], within: set[int]) -> list[int] | None:
    legs = disjoint_paths_to(g, [u, v], cycle, within)
    if legs is None:
        return None
    pu, pv = legs
    arc = _longer_arc(cycle, pu[-1], pv[-1])
    return pu[:-1] + arc + pv[-2::-1]


def path_one_exception(
    g: Graph,
    x: int,
    u: int,
    v: int,
    delta: int,
    strict: bool = True,
    budget: int | None = DEFAULT_BUDGET,
) -> Path:
    """A u-v path of order at least ``delta + 1`` when only ``x`` may have low degree."""
    if u == v:
        raise ValueError("endpoints must differ")
    if strict:
        _check_two_connected(g)
        _check_degrees(g, delta, (x,))
    if x in (u, v):
        return path_at_least(g, u, v, delta, strict=False, budget=None)
    try:
        p = search_path(g, u, v, delta + 1, budget=budget)
    except _BudgetExceeded:
        p = _structural_one_exception(g, x, u, v, delta)
    if p is None or len(p) < delta + 1:
        raise NotFound(f"no {u}-{v} path of order >= {delta + 1}")
    return Path(p)


def _structural_one_exception(g: Graph, x: int, u: int, v: int, delta: int) -> list[int] | None:
    everyone = set(range(g.n))
    rest = everyone - {x}
    if len(rest) < 3:
        return search_path(g, u, v, delta + 1)
    cut = next((y for y in sorted(rest) if len(components(g, rest - {y})) > 1), None)
    if cut is not None:
        # x and cut split the graph; two avoiding paths close a cycle of order >= 2*delta
        parts = components(g, rest - {cut})
        g1 = set(parts[0])
        g2 = set().union(*parts[1:])
        p = path_avoiding(g, x, cut, g1, delta, strict=False, budget=None).vertices
        q = path_avoiding(g, x, cut, g2, delta, strict=False, budget=None).vertices
        cycle = list(p) + list(q[-2:0:-1])
        return _through_cycle(g, u, v, cycle, everyone)

    if len(rest) < 2 * delta - 2:
        if len(rest) == delta and all(len(g.adj[w] & rest) == delta - 1 for w in rest):
            middle = [w for w in sorted(rest) if w not in (u, v)]
            return [u, x] + middle + [v]
        return search_path(g, u, v, delta + 1, within=rest)

    cycle = search_cycle(g, 2 * delta - 2, within=rest)
    if cycle is None:
        return None
    p = _through_cycle(g, u, v, cycle, rest)
    if p is not None and len(p) >= delta + 1:
        return p
    # tight case: u, v antipodal on a cycle of order exactly 2*delta - 2
    others = everyone - {u, v}
    pieces = components(g, others)
    if len(pieces) > 1:
        g2 = next(c for c in pieces if x in c)
        return search_path(g, u, v, delta + 1, within=everyone - g2)
    if u in cycle and v in cycle:
        n = len(cycle)
        i = cycle.index(u)
        fwd = [cycle[(i + t) % n] for t in range(n)]
        jv = fwd.index(v)
        side_u, side_v = fwd[1:jv], fwd[jv + 1:]
        off_cycle = everyone - set(cycle)
        for ia, a in enumerate(side_u):
            for ib, b in enumerate(side_v):
                inner = search_path(g, a, b, 2, within=off_cycle | {a, b})
                if inner is None:
                    continue
                # the two splices have total order >= 2*delta + 2
                c1 = [u] + side_u[:ia] + inner + side_v[:ib][::-1] + [v]
                c2 = [u] + side_v[ib + 1:][::-1] + inner[::-1] + side_u[ia + 1:] + [v]
                return max(c1, c2, key=len)
    return search_path(g, u, v, delta + 1)

