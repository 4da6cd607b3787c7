"""Saws: a Hamiltonian backbone ``v_1 .. v_{2k+1}`` with every chord ``(v_{2s-1}, v_{2s+1})``.

Backbone positions are 1-based and cyclic modulo ``2k+1``; :meth:`Saw.v`
owns the index arithmetic.  The degree ``d(S)`` is the smaller of the
degrees of ``v_{2k}`` and ``v_{2k+1}`` inside the subgraph induced on the
backbone, host edges among backbone vertices included.

The workhorse is chord shortcutting: wherever a path runs through
``(v_{2s-1}, v_{2s}, v_{2s+1})`` (either direction) the middle vertex can be
dropped, shortening the path by one.  Such triples never overlap in their
middle vertex, so any subset of them can be dropped at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .chopping import OrderFamily, chop, collate
from .errors import HypothesisViolated, OutOfRange, PairNotFound, SawNotFound
from .formats import from_graph6, to_graph6
from .graph import Check, Cycle, Graph, Path, independence_number, max_independent_set


@dataclass(frozen=True)
class Saw:
    host: Graph
    backbone: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "backbone", tuple(self.backbone))

    @property
    def size(self) -> int:
        return len(self.backbone)

    @property
    def k(self) -> int:
        return (len(self.backbone) - 1) // 2

    def v(self, i: int) -> int:
        """Host label of backbone position ``i`` (1-based, cyclic)."""
        return self.backbone[(i - 1) % len(self.backbone)]

    def pos(self, vertex: int) -> int:
        return self.backbone.index(vertex) + 1

    def adjacent(self, i: int, j: int) -> bool:
        return self.host.has_edge(self.v(i), self.v(j))

    def inner_degree(self, i: int) -> int:
        vs = set(self.backbone)
        return len(self.host.adj[self.v(i)] & vs)

    @property
    def degree(self) -> int:
        k = self.k
        return min(self.inner_degree(2 * k), self.inner_degree(2 * k + 1))

    def vertices(self) -> frozenset[int]:
        return frozenset(self.backbone)

    def graph(self) -> tuple[Graph, tuple[int, ...]]:
        return self.host.induced(self.backbone)

    def labels(self, positions: Iterable[int]) -> tuple[int, ...]:
        return tuple(self.v(i) for i in positions)

    def check(self) -> Check:
        b = self.backbone
        n = len(b)
        if n < 3 or n % 2 == 0:
            return Check(False, "backbone_length")
        if len(set(b)) != n or any(not 0 <= x < self.host.n for x in b):
            return Check(False, "backbone_vertices")
        for i in range(1, n + 1):
            if not self.adjacent(i, i + 1):
                return Check(False, "backbone_edge")
        for s in range(1, self.k + 1):
            if not self.adjacent(2 * s - 1, 2 * s + 1):
                return Check(False, "missing_chord")
        return Check(True)

    def to_line(self) -> str:
        return to_graph6(self.host) + " " + " ".join(map(str, self.backbone))

    @classmethod
    def from_line(cls, line: str) -> "Saw":
        head, *rest = line.split()
        return cls(from_graph6(head), tuple(int(x) for x in rest))


# --------------------------------------------------------------------------
# chord shortcuts


def _removable(saw: Saw, positions: list[int]) -> list[int]:
    """Indices (into ``positions``) of middles of chord-shortcuttable triples."""
    out = []
    for idx in range(1, len(positions) - 1):
        a, b, c = positions[idx - 1], positions[idx], positions[idx + 1]
        if b % 2 == 0 and {a, c} == {b - 1, b + 1}:
            out.append(idx)
    return out


def _reduce(saw: Saw, positions: list[int], q: int) -> list[int]:
    drops = _removable(saw, positions)
    need = len(positions) - q
    if need < 0 or need > len(drops):
        raise OutOfRange(f"order {q} not reachable by chord shortcuts from {len(positions)}")
    gone = set(drops[:need])
    return [p for i, p in enumerate(positions) if i not in gone]


def _add_reductions(saw: Saw, fam: OrderFamily, positions: list[int], lo: int | None = None) -> None:
    top = len(positions)
    floor = top - len(_removable(saw, positions))
    for q in range(max(floor, lo or floor), top + 1):
        if q not in fam:
            fam.add(Path(saw.labels(_reduce(saw, positions, q))))


def _arc(saw: Saw, i: int, j: int, forward: bool) -> list[int]:
    n = saw.size
    step = 1 if forward else -1
    out = [i]
    cur = i
    while cur != j:
        cur = (cur - 1 + step) % n + 1
        out.append(cur)
    return out


def _arc_uses_wrap(saw: Saw, arc: list[int]) -> bool:
    n = saw.size
    return any({a, b} == {1, n} for a, b in zip(arc, arc[1:]))


def backbone_reduction(saw: Saw, i: int, j: int, uses_wrap: bool, q: int) -> Path:
    """A q-reduction of the backbone arc from ``v_i`` to ``v_j``.

    ``uses_wrap`` picks the arc through the edge ``(v_{2k+1}, v_1)``.  With
    arc order ``l``, ``q`` ranges over ``[floor(l/2)+2, l]`` for the wrapping
    arc and over ``[ceil(l/2)+1, l]`` otherwise.
    """
    n = saw.size
    i, j = (i - 1) % n + 1, (j - 1) % n + 1
    if i == j:
        raise ValueError("arc endpoints must differ")
    fwd = _arc(saw, i, j, True)
    arc = fwd if _arc_uses_wrap(saw, fwd) == uses_wrap else _arc(saw, i, j, False)
    l = len(arc)
    lo = l // 2 + 2 if uses_wrap else (l + 1) // 2 + 1
    if not lo <= q <= l:
        raise OutOfRange(f"q={q} outside [{lo}, {l}]")
    return Path(saw.labels(_reduce(saw, arc, q)))


# --------------------------------------------------------------------------
# extraction


def find_saw(g: Graph, p: int, r: int, alpha_known: bool = False) -> Saw:
    """A saw of degree at least ``p - r`` in a graph with min degree >= p and alpha <= r.

    Grows a path ``v_1 .. v_{2t+1}`` carrying the odd chords two vertices at a
    time through an edge inside the outside-neighbourhood of the last vertex
    (or of the second-to-last, after swapping the final two), then closes
    the saw at the first vertex seen by either of the last two.
    """
    low = next((w for w in range(g.n) if g.degree(w) < p), None)
    if low is not None:
        raise HypothesisViolated(f"vertex {low} has degree {g.degree(low)} < {p}", witness=low)
    if not alpha_known:
        mis = max_independent_set(g)
        if len(mis) > r:
            raise HypothesisViolated(f"independence number {len(mis)} > {r}", witness=mis)

    def extension(path: list[int]):
        on = set(path)
        out = sorted(g.adj[path[-1]] - on)
        for ia, a in enumerate(out):
            for b in out[ia + 1:]:
                if g.has_edge(a, b):
                    return a, b
        return None

    # with p > r any start works; otherwise pick a vertex on a triangle
    start = next((w for w in range(g.n) if extension([w]) is not None), None)
    if start is None:
        raise SawNotFound("graph is triangle-free, so it has no saw")
    path = [start]
    while True:
        ext = extension(path)
        if ext is None and len(path) >= 3:
            swapped = path[:-2] + [path[-1], path[-2]]
            ext = extension(swapped)
            if ext is not None:
                path = swapped
        if ext is None:
            break
        path.extend(ext)

    if len(path) < 3:
        raise SawNotFound("could not start a chorded path")
    last, prev = path[-1], path[-2]
    i = next(
        idx for idx in range(1, len(path) - 1)
        if g.has_edge(path[idx - 1], last) or g.has_edge(path[idx - 1], prev)
    )
    if not g.has_edge(path[i - 1], last):
        path = path[:-2] + [last, prev]
    if i % 2 == 1:
        backbone = path[i - 1:]
    else:
        backbone = [path[i - 1], path[i - 2]] + path[i:]
    saw = Saw(g, tuple(backbone))
    if not saw.check() or saw.degree < p - r:
        raise SawNotFound(f"extracted saw fails: {saw.check().reason}, degree {saw.degree}")
    return saw


# --------------------------------------------------------------------------
# families of paths of consecutive orders


def _scan_endpair(saw: Saw, fam: OrderFamily, top: int) -> None:
    """Add v_{2k}-v_{2k+1} paths of orders 4..top found by the crossing-pair scan.

    Relabel the backbone as ``w_1 = v_{2k+1}, w_2 = v_1, ..., w_n = v_{2k}``;
    a pair ``(w_i, w_{i+g})`` with crossing edges to ``w_1`` and ``w_n`` yields
    a path of order ``g + 3``.
    """
    k = saw.k
    n = saw.size
    w = [None, 2 * k + 1] + list(range(1, 2 * k + 1))
    x, y = 2 * k, 2 * k + 1
    for m in range(4, top + 1):
        if m in fam:
            continue
        g = m - 3
        for i in range(2, n - g):
            a, b = w[i], w[i + g]
            run = [w[t] for t in range(i, i + g + 1)]
            if saw.adjacent(y, a) and saw.adjacent(x, b):
                fam.add(Path(saw.labels([x] + run[::-1] + [y])))
                break
            if saw.adjacent(y, b) and saw.adjacent(x, a):
                fam.add(Path(saw.labels([x] + run + [y])))
                break


def endpair_paths(saw: Saw) -> OrderFamily:
    """v_{2k}-v_{2k+1} paths of every order in ``[2, 2k+1]``; needs ``d(S) >= 2(2k+1)/3``."""
    k = saw.k
    d = saw.degree
    if 3 * d < 2 * (2 * k + 1):
        raise HypothesisViolated(f"saw degree {d} < 2(2k+1)/3 with k={k}")
    fam = _endpair_family(saw)
    missing = [q for q in range(2, 2 * k + 2) if q not in fam]
    if missing:
        raise PairNotFound(f"no crossing pair for orders {missing}")
    return fam


def _endpair_family(saw: Saw) -> OrderFamily:
    k = saw.k
    x, y = saw.v(2 * k), saw.v(2 * k + 1)
    fam = OrderFamily(saw.host, (x, y))
    fam.add(Path((x, y)))
    fam.add(Path((x, saw.v(2 * k - 1), y)))
    arc = _arc(saw, 2 * k, 2 * k + 1, False)
    _add_reductions(saw, fam, arc, lo=k + 2)
    _scan_endpair(saw, fam, k + 1)
    return fam


def _pr_chain(saw: Saw, j: int) -> list[tuple[int, int]]:
    """Nested pairs (i, l), both neighbours of v_{2k+1}, 1 <= i <= j < l <= 2k.

    Starts from (1, 2k); each next pair is the widest one nested in the
    previous, ties to the smallest (i, l).
    """
    k = saw.k
    top = 2 * k + 1
    nb = [i for i in range(1, 2 * k + 1) if saw.adjacent(i, top)]
    pairs = [(i, l) for i in nb for l in nb if i <= j < l]
    chain = [(1, 2 * k)]
    while True:
        hi, hl = chain[-1]
        inside = [(i, l) for i, l in pairs if i >= hi and l <= hl and (i, l) != (hi, hl)]
        if not inside:
            return chain
        chain.append(min(inside, key=lambda p: (-(p[1] - p[0]), p)))


def consecutive_pair_paths(saw: Saw, j: int) -> OrderFamily:
    """Paths between backbone neighbours ``v_j`` and ``v_{j+1}``.

    Covers ``[2k - d + 6, 2k + 1]`` with ``d = d(S)`` (plus ``[k+2, 2k+1]`` from
    the long arc); ``j = 2k + 1`` is the wrap pair ``(v_{2k+1}, v_1)``.
    """
    k = saw.k
    n = saw.size
    j = (j - 1) % n + 1
    x, y = saw.v(j), saw.v(j + 1)
    fam = OrderFamily(saw.host, (x, y))
    fam.add(Path((x, y)))
    jn = j % n + 1
    long_arc = _arc(saw, j, jn, False)
    _add_reductions(saw, fam, long_arc)
    if j == 2 * k:
        endpair = _endpair_family(saw)
        for q in endpair.orders():
            fam.add(endpair[q])
    elif j == n:
        for l in range(2, 2 * k + 1):
            if saw.adjacent(l, n):
                _add_reductions(saw, fam, [n] + list(range(l, 0, -1)))
    else:
        for i, l in _pr_chain(saw, j):
            positions = list(range(j, i - 1, -1)) + [n] + list(range(l, j, -1))
            _add_reductions(saw, fam, positions)
    return fam


def any_pair_paths(saw: Saw, x: int, y: int) -> tuple[int, OrderFamily]:
    """Some ``l > d`` and x-y paths covering ``[l - ceil(d/2) + 5, l]``; needs ``d(S) >= k``.

    ``x`` and ``y`` are host labels of backbone vertices.
    """
    k = saw.k
    d = saw.degree
    n = saw.size
    if d < k:
        raise HypothesisViolated(f"saw degree {d} < k={k}")
    if x == y:
        raise ValueError("x and y must differ")
    px, py = saw.pos(x), saw.pos(y)
    t = 2 * k - d
    gap = abs(px - py)
    dist = min(gap, n - gap)
    route = None
    if dist >= t + 2:
        route = _bridge_route(saw, px, py)
    if route is None:
        fwd = _arc(saw, px, py, True)
        bwd = _arc(saw, px, py, False)
        route = fwd if len(fwd) >= len(bwd) else bwd
    fam = OrderFamily(saw.host, (x, y))
    _add_reductions(saw, fam, route)
    return len(route), fam


def _bridge_route(saw: Saw, px: int, py: int) -> list[int] | None:
    """Long x-y route detouring through v_{2k} and v_{2k+1}, as backbone positions."""
    k = saw.k
    a, b = 2 * k, 2 * k + 1
    flip = False
    if {px, py} <= set(range(1, 2 * k)):
        i, j = sorted((px, py))
        flip = px > py
        inner = range(i + 1, j)
        hits = [p for p in inner if saw.adjacent(p, a) or saw.adjacent(p, b)]
        if not hits:
            return None
        p = hits[0]
        if saw.adjacent(p, b):
            qs = [q for q in inner if saw.adjacent(q, a)]
            if not qs:
                return None
            q = max(qs)
            mid = list(range(p, q + 1))
        else:
            qs = [q for q in inner if saw.adjacent(q, b)]
            if not qs:
                return None
            q = max(qs)
            mid = list(range(q, p - 1, -1))
        route = list(range(i, 0, -1)) + [b] + mid + list(range(a, j - 1, -1))
    elif b in (px, py) and a not in (px, py):
        j = py if px == b else px
        flip = px != b
        qs = [q for q in range(1, j) if saw.adjacent(q, a)]
        if not qs:
            return None
        q = max(qs)
        route = [b] + list(range(1, q + 1)) + list(range(a, j - 1, -1))
    elif a in (px, py) and b not in (px, py):
        j = py if px == a else px
        flip = px != a
        qs = [q for q in range(j + 1, a + 1) if saw.adjacent(q, b)]
        if not qs:
            return None
        q = min(qs)
        route = list(range(a, q - 1, -1)) + [b] + list(range(1, j + 1))
    else:
        return None
    return route[::-1] if flip else route


def saw_cycle(saw: Saw, r: int, q: int) -> Cycle:
    """A cycle of order exactly ``q`` in the saw, for ``q`` in ``[4r, 2k+1]``.

    ``r`` must bound the independence number of the saw.  Orders from ``k+1``
    up come straight from shortcutting the closed backbone; shorter ones
    splice shortcuts of ``v_1 .. v_{4r-1}`` with a chopped ``v_{4r} .. v_{2k+1}``.
    """
    k = saw.k
    n = saw.size
    if k < 3:
        raise HypothesisViolated(f"k={k} < 3")
    if r < 1 or independence_number(saw.host, saw.backbone) > r:
        raise HypothesisViolated(f"independence number of the saw exceeds r={r}")
    if not 4 * r <= q <= n:
        raise OutOfRange(f"q={q} outside [{4 * r}, {n}]")
    if q >= k + 1:
        return Cycle(saw.labels(_reduce(saw, list(range(1, n + 1)), q)))

    head = list(range(1, 4 * r))
    tail = list(range(n, 4 * r - 1, -1))
    x1, y1 = saw.v(1), saw.v(4 * r - 1)
    x2, y2 = saw.v(n), saw.v(4 * r)
    fam1 = OrderFamily(saw.host, (x1, y1))
    _add_reductions(saw, fam1, head)
    alpha2 = max(1, independence_number(saw.host, saw.labels(tail)))
    ladder = chop(saw.host, Path(saw.labels(tail)), alpha2)
    return collate(
        saw.host,
        saw.labels(head),
        saw.labels(tail),
        (x1, x2),
        (y1, y2),
        fam1,
        ladder,
        k=2 * alpha2,
        a=2 * r,
        b=4 * r - 1,
        l1=1,
        l2=len(tail),
        s=q,
    )
