"""Path reductions that hit every short window of orders, and cycle splicing.

A *reduction* of a u-v path P is a u-v path using only vertices of P.
:func:`chop` repeatedly shortcuts P through a chord found among its first
``2*alpha + 1`` vertices; consecutive orders then differ by at most
``2*alpha``, so every window of ``2*alpha`` orders below ``|P|`` is hit.
:func:`collate` splices a path family on one side of a vertex partition with
a family on the other side, through two disjoint crossing edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import BadFamily, NoChord, NotCovered, OutOfRange
from .graph import Cycle, Graph, Path, verify_certificate_part


@dataclass
class OrderFamily:
    """Concrete u-v paths keyed by their order."""

    host: Graph
    endpoints: tuple[int, int]
    paths: dict[int, Path] = field(default_factory=dict)

    def add(self, path: Path | Iterable[int]) -> None:
        p = path if isinstance(path, Path) else Path(tuple(path))
        if p.ends != self.endpoints:
            raise BadFamily(f"path ends {p.ends} differ from family endpoints {self.endpoints}")
        self.paths.setdefault(p.order, p)

    def update(self, other: "OrderFamily") -> None:
        for q in sorted(other.paths):
            self.add(other.paths[q])

    def orders(self) -> list[int]:
        return sorted(self.paths)

    def covers(self, lo: int, hi: int) -> bool:
        return all(q in self.paths for q in range(lo, hi + 1))

    def __contains__(self, q: int) -> bool:
        return q in self.paths

    def __getitem__(self, q: int) -> Path:
        return self.paths[q]

    def validate(self, within: Iterable[int] | None = None) -> None:
        allowed = None if within is None else set(within)
        for q, p in self.paths.items():
            if p.order != q or p.ends != self.endpoints:
                raise BadFamily(f"entry {q} holds a path of order {p.order} ends {p.ends}")
            check = verify_certificate_part(self.host, p)
            if not check:
                raise BadFamily(f"entry {q} is not a path: {check.reason}")
            if allowed is not None and not set(p.vertices) <= allowed:
                raise BadFamily(f"entry {q} leaves its vertex class")

    @classmethod
    def from_paths(cls, host: Graph, u: int, v: int, paths: Iterable) -> "OrderFamily":
        fam = cls(host, (u, v))
        for p in paths:
            fam.add(p)
        return fam


@dataclass(frozen=True)
class ReductionLadder:
    host: Graph
    steps: tuple[Path, ...]
    alpha: int

    @property
    def orders(self) -> list[int]:
        return [p.order for p in self.steps]

    def family(self) -> OrderFamily:
        u, v = self.steps[0].ends
        return OrderFamily.from_paths(self.host, u, v, self.steps)


def _shortcut(g: Graph, verts: tuple[int, ...], alpha: int) -> tuple[int, ...]:
    window = verts[: 2 * alpha + 1]
    best = None
    for i in range(len(window)):
        for j in range(i + 2, len(window)):
            if g.has_edge(window[i], window[j]):
                # keep as many vertices as possible: shortest skip, then earliest
                key = (j - i, i)
                if best is None or key < best[0]:
                    best = (key, i, j)
    if best is None:
        raise NoChord(
            f"first {len(window)} vertices induce a chordless path; alpha={alpha} is too small",
            window[::2],
        )
    _, i, j = best
    return verts[: i + 1] + verts[j:]


def chop(g: Graph, p: Path | Iterable[int], alpha: int) -> ReductionLadder:
    """Ladder of successive reductions ``P_0 = p, P_1, ...`` down to order ``<= 2*alpha``.

    ``alpha`` must bound the independence number of ``g[V(p)]``; otherwise
    :class:`NoChord` is raised carrying an independent set of size ``alpha+1``.
    """
    path = p if isinstance(p, Path) else Path(tuple(p))
    if alpha < 1:
        raise ValueError("alpha must be positive")
    check = verify_certificate_part(g, path)
    if not check:
        raise ValueError(f"input is not a path of g: {check.reason}")
    steps = [path]
    verts = path.vertices
    while len(verts) > 2 * alpha:
        verts = _shortcut(g, verts, alpha)
        steps.append(Path(verts))
    return ReductionLadder(g, tuple(steps), alpha)


def reduction_in_interval(ladder: ReductionLadder, lo: int, hi: int) -> Path:
    """A ladder step whose order lies in ``[lo, hi]``."""
    top = ladder.steps[0].order
    if lo < 1 or hi > top or hi - lo + 1 < 2 * ladder.alpha:
        raise ValueError(f"window [{lo}, {hi}] is not a legal query for this ladder")
    for step in ladder.steps:
        if lo <= step.order <= hi:
            return step
    raise NotCovered(f"no step of order in [{lo}, {hi}]; ladder orders {ladder.orders}")


def windows_hit(orders: Iterable[int], k: int, lo: int, hi: int) -> bool:
    """True iff every interval of ``k`` consecutive integers inside ``[lo, hi]`` meets ``orders``."""
    keys = sorted(q for q in set(orders) if lo <= q <= hi)
    if hi - lo + 1 < k:
        return True
    if not keys:
        return False
    gaps = [keys[0] - lo] + [b - a - 1 for a, b in zip(keys, keys[1:])] + [hi - keys[-1]]
    return max(gaps) < k


def collate_range(fam2_orders: Iterable[int], a: int, b: int, l1: int, l2: int) -> tuple[int, int]:
    """Cycle orders reachable by collating: ``[a + min, b + max]`` of the family orders in ``[l1, l2]``."""
    keys = [q for q in fam2_orders if l1 <= q <= l2]
    if not keys:
        return (1, 0)
    return a + min(keys), b + max(keys)


def collate(
    g: Graph,
    v1: Iterable[int],
    v2: Iterable[int],
    x_edge: tuple[int, int],
    y_edge: tuple[int, int],
    fam1: OrderFamily,
    fam2: OrderFamily | ReductionLadder,
    k: int,
    a: int,
    b: int,
    l1: int,
    l2: int,
    s: int,
) -> Cycle:
    """A cycle of order exactly ``s`` through the crossing edges ``x_edge`` and ``y_edge``.

    ``fam1`` must cover ``[a, b]`` with x1-y1 paths in ``g[v1]``; the orders of
    ``fam2`` (x2-y2 paths in ``g[v2]``) must meet every window of ``k`` orders
    inside ``[l1, l2]``, and ``b - a >= k - 1``.  Any ``s`` in
    ``[a + l1 + k, b + l2]`` is then reachable; more generally any ``s``
    between ``a`` plus the smallest and ``b`` plus the largest fam2 order in
    ``[l1, l2]``.
    """
    if isinstance(fam2, ReductionLadder):
        fam2 = fam2.family()
    v1, v2 = set(v1), set(v2)
    x1, x2 = x_edge
    y1, y2 = y_edge
    if not v1 or not v2 or v1 & v2:
        raise ValueError("v1 and v2 must be disjoint and nonempty")
    if not (x1 in v1 and y1 in v1 and x2 in v2 and y2 in v2):
        raise ValueError("crossing edges must run from v1 to v2")
    if x1 == y1 or x2 == y2:
        raise ValueError("crossing edges must be disjoint")
    if not (g.has_edge(x1, x2) and g.has_edge(y1, y2)):
        raise ValueError("crossing pairs are not edges of g")
    if b - a < k - 1:
        raise BadFamily(f"condition b - a >= k - 1 fails: b-a={b - a}, k={k}")
    if fam1.endpoints != (x1, y1) or fam2.endpoints != (x2, y2):
        raise BadFamily("family endpoints do not match the crossing edges")
    fam1.validate(v1)
    fam2.validate(v2)
    if not fam1.covers(a, b):
        missing = [q for q in range(a, b + 1) if q not in fam1]
        raise BadFamily(f"fam1 misses orders {missing} of [{a}, {b}]")
    if not windows_hit(fam2.orders(), k, l1, l2):
        raise BadFamily(f"fam2 orders {fam2.orders()} miss a window of {k} in [{l1}, {l2}]")

    lo, hi = collate_range(fam2.orders(), a, b, l1, l2)
    if not lo <= s <= hi:
        raise OutOfRange(f"s={s} outside collatable range [{lo}, {hi}]")
    for si in sorted((q for q in fam2.orders() if l1 <= q <= l2), reverse=True):
        q = s - si
        if a <= q <= b:
            left = fam1[q].vertices
            right = fam2[si].vertices
            return Cycle(left + right[::-1])
    raise BadFamily(f"no splice reaches s={s}")  # unreachable once windows_hit holds
