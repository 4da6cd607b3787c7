"""Simple undirected graphs, exact small-scale oracles and validity checks.

Throughout the package the *order* of a path or cycle is its number of
vertices, not its number of edges.  A path of order 2 is a single edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DisconnectedInput, OracleTooLarge

PATH_ORACLE_CAP = 16
INDEPENDENCE_CAP = 60


class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "masks", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("negative vertex count")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        norm = set()
        for a, b in edges:
            a, b = int(a), int(b)
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) out of range for n={n}")
            if a == b:
                raise ValueError(f"self-loop at {a}")
            e = (a, b) if a < b else (b, a)
            if e in norm:
                raise ValueError(f"parallel edge {e}")
            norm.add(e)
            nbrs[a].add(b)
            nbrs[b].add(a)
        self.n = n
        self.adj = tuple(frozenset(s) for s in nbrs)
        self.masks = tuple(sum(1 << w for w in s) for s in nbrs)
        self._edges = tuple(sorted(norm))

    @classmethod
    def from_adjacency(cls, nbrs: Sequence[Iterable[int]]) -> "Graph":
        edges = {(min(a, b), max(a, b)) for a, s in enumerate(nbrs) for b in s}
        return cls(len(nbrs), edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ascending ``(u, v)`` pairs with ``u < v``, sorted."""
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adj[a]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def min_degree(self) -> int:
        return min((len(s) for s in self.adj), default=0)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph, relabelled; returns ``(sub, labels)`` with ``labels[new] == old``."""
        labels = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(labels)}
        edges = [
            (index[a], index[b])
            for a, b in self._edges
            if a in index and b in index
        ]
        return Graph(len(labels), edges), labels

    def without(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        drop = set(vertices)
        return self.induced(v for v in range(self.n) if v not in drop)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self._edges == other._edges

    def __hash__(self):
        return hash((self.n, self._edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def complete_graph(n: int) -> Graph:
    return Graph(n, ((a, b) for a in range(n) for b in range(a + 1, n)))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def cycle_graph(n: int) -> Graph:
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    edges, off = [], 0
    for g in graphs:
        edges.extend((a + off, b + off) for a, b in g.edges)
        off += g.n
    return Graph(off, edges)


@dataclass(frozen=True)
class Path:
    """A sequence of distinct vertices; consecutive ones must be adjacent in the host."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    def reversed(self) -> "Path":
        return Path(self.vertices[::-1])

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


@dataclass(frozen=True)
class Cycle:
    """Cyclically ordered distinct vertices; the closing edge is last -> first."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))

    @property
    def order(self) -> int:
        return len(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


# --------------------------------------------------------------------------
# connectivity


def components(g: Graph, within: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Connected components of ``g`` (or of ``g[within]``), ordered by smallest vertex."""
    alive = set(range(g.n)) if within is None else set(within)
    out = []
    for s in sorted(alive):
        if not alive or s not in alive:
            continue
        comp = {s}
        stack = [s]
        alive.discard(s)
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y in alive:
                    alive.discard(y)
                    comp.add(y)
                    stack.append(y)
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph, within: Iterable[int] | None = None) -> bool:
    vs = set(range(g.n)) if within is None else set(within)
    return len(vs) > 0 and len(components(g, vs)) == 1


def is_two_connected(g: Graph, within: Iterable[int] | None = None) -> bool:
    """At least three vertices, connected, and no cutvertex."""
    vs = set(range(g.n)) if within is None else set(within)
    if len(vs) < 3 or not is_connected(g, vs):
        return False
    return not any(len(components(g, vs - {v})) > 1 for v in vs)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cutvertices: frozenset[int]
    endblock: tuple[bool, ...] = field(default=())

    def endblocks(self) -> list[frozenset[int]]:
        return [b for b, e in zip(self.blocks, self.endblock) if e]

    def cutvertices_of(self, block: frozenset[int]) -> frozenset[int]:
        return block & self.cutvertices


def block_decomposition(g: Graph, within: Iterable[int] | None = None) -> BlockDecomposition:
    """Blocks (maximal 2-connected pieces and bridges) and cutvertices.

    Iterative Hopcroft-Tarjan with an edge stack.  Blocks are ordered by
    their smallest vertex label, ties broken by the sorted member lists.
    """
    vs = set(range(g.n)) if within is None else set(within)
    if not vs:
        raise DisconnectedInput("empty graph")
    if len(components(g, vs)) != 1:
        raise DisconnectedInput("block decomposition needs a connected graph")
    root = min(vs)
    if len(vs) == 1:
        return BlockDecomposition((frozenset(vs),), frozenset(), (True,))

    disc = {root: 0}
    low = {root: 0}
    counter = 1
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()
    edge_stack: list[tuple[int, int]] = []
    root_children = 0
    stack = [(root, -1, iter(sorted(g.adj[root] & vs)))]
    while stack:
        x, parent, it = stack[-1]
        advanced = False
        for y in it:
            if y not in disc:
                disc[y] = low[y] = counter
                counter += 1
                edge_stack.append((x, y))
                stack.append((y, x, iter(sorted(g.adj[y] & vs))))
                advanced = True
                break
            if y != parent and disc[y] < disc[x]:
                edge_stack.append((x, y))
                low[x] = min(low[x], disc[y])
        if advanced:
            continue
        stack.pop()
        if parent == -1:
            continue
        low[parent] = min(low[parent], low[x])
        if low[x] >= disc[parent]:
            if parent == root:
                root_children += 1
            else:
                cuts.add(parent)
            members = set()
            while True:
                a, b = edge_stack.pop()
                members.update((a, b))
                if (a, b) == (parent, x):
                    break
            blocks.append(frozenset(members))
    if root_children > 1:
        cuts.add(root)
    blocks.sort(key=lambda b: (min(b), sorted(b)))
    cutset = frozenset(cuts)
    flags = tuple(len(b & cutset) <= 1 for b in blocks)
    return BlockDecomposition(tuple(blocks), cutset, flags)


# --------------------------------------------------------------------------
# independence number


def _clique_cover_size(masks, cand: int) -> int:
    count = 0
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        clique = low
        common = cand & masks[v]
        while common:
            w_low = common & -common
            clique |= w_low
            common &= masks[w_low.bit_length() - 1]
        cand &= ~clique
        count += 1
    return count


def max_independent_set(
    g: Graph, within: Iterable[int] | None = None, cap: int = INDEPENDENCE_CAP
) -> frozenset[int]:
    """Exact maximum independent set by branch and bound with clique-cover pruning.

    Deterministic: among optimal sets the one found first by the fixed
    branching order is returned.
    """
    vs = set(range(g.n)) if within is None else set(within)
    if len(vs) > cap:
        raise OracleTooLarge(f"independence oracle capped at {cap} vertices, got {len(vs)}")
    masks = g.masks
    best = [0, 0]

    def rec(cand: int, chosen: int, size: int):
        if cand == 0:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        if size + cand.bit_count() <= best[0]:
            return
        if size + _clique_cover_size(masks, cand) <= best[0]:
            return
        # branch on the closed neighbourhood of a minimum-degree candidate
        v, vdeg = -1, None
        c = cand
        while c:
            low = c & -c
            u = low.bit_length() - 1
            d = (masks[u] & cand).bit_count()
            if vdeg is None or d < vdeg:
                v, vdeg = u, d
            c ^= low
        branch = (masks[v] & cand) | (1 << v)
        order = [v] + [w for w in range(g.n) if (branch >> w) & 1 and w != v]
        for w in order:
            if not (cand >> w) & 1:
                continue
            rec(cand & ~(masks[w] | (1 << w)), chosen | (1 << w), size + 1)
            cand &= ~(1 << w)

    start = sum(1 << v for v in vs)
    rec(start, 0, 0)
    return frozenset(v for v in range(g.n) if (best[1] >> v) & 1)


def independence_number(g: Graph, within: Iterable[int] | None = None, cap: int = INDEPENDENCE_CAP) -> int:
    return len(max_independent_set(g, within, cap))


# --------------------------------------------------------------------------
# path and cycle order oracles (subset dynamic programming)


def _check_cap(n: int, cap: int):
    if n > cap:
        raise OracleTooLarge(f"enumeration oracle capped at {cap} vertices, got {n}")


def all_path_orders(g: Graph, u: int, v: int, cap: int = PATH_ORACLE_CAP) -> set[int]:
    """Exact set of orders of all u-v paths."""
    if u == v:
        raise ValueError("endpoints must differ")
    _check_cap(g.n, cap)
    masks = g.masks
    ubit, vbit = 1 << u, 1 << v
    dp = [0] * (1 << g.n)
    dp[ubit] = ubit
    orders = set()
    for mask in range(1 << g.n):
        ends = dp[mask]
        if not ends:
            continue
        if ends & vbit:
            orders.add(mask.bit_count())
            ends &= ~vbit
        while ends:
            low = ends & -ends
            nxt = masks[low.bit_length() - 1] & ~mask
            while nxt:
                b = nxt & -nxt
                dp[mask | b] |= b
                nxt ^= b
            ends ^= low
    return orders


def path_orders_from(g: Graph, u: int, cap: int = PATH_ORACLE_CAP) -> dict[int, set[int]]:
    """``{v: all_path_orders(g, u, v)}`` for every ``v != u``, in one pass."""
    _check_cap(g.n, cap)
    masks = g.masks
    out: dict[int, set[int]] = {v: set() for v in range(g.n) if v != u}
    dp = [0] * (1 << g.n)
    dp[1 << u] = 1 << u
    for mask in range(1 << g.n):
        ends = dp[mask]
        size = mask.bit_count()
        while ends:
            low = ends & -ends
            w = low.bit_length() - 1
            if w != u:
                out[w].add(size)
            nxt = masks[w] & ~mask
            while nxt:
                b = nxt & -nxt
                dp[mask | b] |= b
                nxt ^= b
            ends ^= low
    return out


def all_cycle_orders(g: Graph, cap: int = PATH_ORACLE_CAP) -> set[int]:
    """Exact set of orders of all cycles (each cycle rooted at its smallest vertex)."""
    _check_cap(g.n, cap)
    masks = g.masks
    n = g.n
    orders = set()
    for s in range(n):
        sbit = 1 << s
        higher = ~((sbit << 1) - 1)
        dp: dict[int, int] = {sbit: sbit}
        # masks grow monotonically, so process by popcount layers
        layer = {sbit}
        size = 1
        while layer:
            nxt_layer = set()
            for mask in layer:
                ends = dp[mask]
                e = ends
                while e:
                    low = e & -e
                    w = low.bit_length() - 1
                    if size >= 3 and masks[w] & sbit:
                        orders.add(size)
                    ext = masks[w] & ~mask & higher
                    while ext:
                        b = ext & -ext
                        nm = mask | b
                        if nm in dp:
                            dp[nm] |= b
                        else:
                            dp[nm] = b
                            nxt_layer.add(nm)
                        ext ^= b
                    e ^= low
            layer = nxt_layer
            size += 1
    return orders


def path_of_order(g: Graph, u: int, v: int, q: int, within: Iterable[int] | None = None) -> Path | None:
    """Some u-v path of exactly order ``q`` by exhaustive DFS, or None.  Exponential."""
    vs = set(range(g.n)) if within is None else set(within)
    if u == v or u not in vs or v not in vs or q < 2:
        return None
    path = [u]
    used = {u}

    def reachable_ok(x: int) -> bool:
        seen = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for z in g.adj[y]:
                if z == v:
                    return True
                if z in vs and z not in used and z not in seen:
                    seen.add(z)
                    stack.append(z)
        return False

    def rec() -> bool:
        x = path[-1]
        if len(path) == q - 1:
            return v in g.adj[x]
        if not reachable_ok(x):
            return False
        for y in sorted(g.adj[x]):
            if y == v or y in used or y not in vs:
                continue
            path.append(y)
            used.add(y)
            if rec():
                return True
            path.pop()
            used.discard(y)
        return False

    if rec():
        return Path(tuple(path) + (v,))
    return None


# --------------------------------------------------------------------------
# validity checks


@dataclass(frozen=True)
class Check:
    """Truthy iff ``ok``; ``reason`` names the first violated condition."""

    ok: bool
    reason: str = "ok"

    def __bool__(self):
        return self.ok


def verify_certificate_part(g: Graph, obj) -> Check:
    """Check a Path, Cycle or vertex set against its own invariants in ``g``."""
    if isinstance(obj, (Path, Cycle)):
        vs = obj.vertices
        if any(not (0 <= x < g.n) for x in vs):
            return Check(False, "vertex_out_of_range")
        if len(set(vs)) != len(vs):
            return Check(False, "repeated_vertex")
        if isinstance(obj, Path):
            if len(vs) < 1:
                return Check(False, "too_short")
            pairs = zip(vs, vs[1:])
        else:
            if len(vs) < 3:
                return Check(False, "too_short")
            pairs = zip(vs, vs[1:] + vs[:1])
        for a, b in pairs:
            if not g.has_edge(a, b):
                return Check(False, "not_adjacent")
        return Check(True)
    members = list(obj)
    if any(not (0 <= x < g.n) for x in members):
        return Check(False, "vertex_out_of_range")
    if len(set(members)) != len(members):
        return Check(False, "repeated_vertex")
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if g.has_edge(a, b):
                return Check(False, "not_independent")
    return Check(True)
