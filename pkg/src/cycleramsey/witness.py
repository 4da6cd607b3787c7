"""Find a ``C_{p+1}`` or an independent set of size ``r+1`` in a graph of order ``pr+1``.

:func:`ramsey_witness` is a total algorithm for ``p >= 4r+5``: it
recurses on ``r`` through a minimum-degree vertex and through cut
vertices, extracts a saw, and then splices a path family inside the saw
with a chopped path outside it.  Every step is appended to the trace, so a
:class:`Certificate` of kind ``Failure`` pinpoints the construction that
came back empty.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable

from .chopping import OrderFamily, chop, collate, collate_range
from .egpaths import path_at_least, path_one_exception
from .errors import CycleRamseyError, ParseError
from .graph import (
    Check,
    Cycle,
    Graph,
    Path,
    block_decomposition,
    components,
    is_two_connected,
    max_independent_set,
)
from .saws import Saw, any_pair_paths, consecutive_pair_paths, endpair_paths, find_saw, saw_cycle

SCHEMA = "cycleramsey-certificate/1"
SEARCH_BUDGET = 20_000
MAX_ATTEMPTS = 400
CASES = ("rest_two_connected", "consecutive_pair", "components", "endblock")


class Kind(str, Enum):
    CYCLE = "CycleFound"
    INDEPENDENT_SET = "IndependentSetFound"
    HYPOTHESIS = "HypothesisViolated"
    FAILURE = "Failure"


@dataclass(frozen=True)
class Step:
    depth: int
    case: str
    op: str
    params: dict
    order: int | None = None

    def to_dict(self) -> dict:
        return {"depth": self.depth, "case": self.case, "lemma": self.op, "params": self.params,
                "output_order": self.order}

    @classmethod
    def from_dict(cls, d: dict) -> "Step":
        return cls(d["depth"], d["case"], d["lemma"], dict(d["params"]), d["output_order"])


@dataclass(frozen=True)
class Certificate:
    kind: Kind
    p: int
    r: int
    cycle: Cycle | None = None
    independent_set: frozenset[int] | None = None
    trace: tuple[Step, ...] = ()
    message: str = ""

    @property
    def found(self) -> bool:
        return self.kind in (Kind.CYCLE, Kind.INDEPENDENT_SET)

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "kind": self.kind.value,
            "p": self.p,
            "r": self.r,
            "cycle": None if self.cycle is None else list(self.cycle.vertices),
            "independent_set": None if self.independent_set is None else sorted(self.independent_set),
            "message": self.message,
            "trace": [s.to_dict() for s in self.trace],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        try:
            d = json.loads(text)
            if not isinstance(d, dict):
                raise ParseError("certificate must be a JSON object")
            if d.get("schema") != SCHEMA:
                raise ParseError(f"unknown certificate schema {d.get('schema')!r}")
            return cls(
                Kind(d["kind"]),
                int(d["p"]),
                int(d["r"]),
                None if d["cycle"] is None else Cycle(tuple(d["cycle"])),
                None if d["independent_set"] is None else frozenset(d["independent_set"]),
                tuple(Step.from_dict(s) for s in d["trace"]),
                d.get("message", ""),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"malformed certificate: {e}") from None


def verify_certificate(g: Graph, p: int, r: int, c: Certificate) -> Check:
    """Re-check a certificate against ``g`` from scratch."""
    if c.kind == Kind.CYCLE:
        if c.cycle is None:
            return Check(False, "missing_cycle")
        vs = list(c.cycle.vertices)
        if len(vs) != p + 1:
            return Check(False, "wrong_order")
        if any(not (isinstance(v, int) and 0 <= v < g.n) for v in vs):
            return Check(False, "vertex_out_of_range")
        if len(set(vs)) != len(vs):
            return Check(False, "repeated_vertex")
        for i in range(len(vs)):
            if vs[(i + 1) % len(vs)] not in g.adj[vs[i]]:
                return Check(False, "not_adjacent")
        return Check(True)
    if c.kind == Kind.INDEPENDENT_SET:
        if c.independent_set is None:
            return Check(False, "missing_set")
        vs = sorted(c.independent_set)
        if len(vs) != r + 1:
            return Check(False, "wrong_size")
        if any(not (isinstance(v, int) and 0 <= v < g.n) for v in vs):
            return Check(False, "vertex_out_of_range")
        for i, a in enumerate(vs):
            for b in vs[i + 1:]:
                if b in g.adj[a]:
                    return Check(False, "not_independent")
        return Check(True)
    return Check(False, "no_certificate")


# --------------------------------------------------------------------------
# driver


class _Stuck(Exception):
    pass


def ramsey_witness(g: Graph, p: int, r: int) -> Certificate:
    """CycleFound with a ``C_{p+1}`` or IndependentSetFound with ``r+1`` vertices.

    Requires order ``p*r + 1``, ``p >= 3``, ``r >= 1`` and ``p >= 4r + 5`` when
    ``r >= 2``; otherwise the result has kind ``HypothesisViolated``.
    """
    trace: list[Step] = []
    bad = None
    if p < 3 or r < 1:
        bad = f"need p >= 3 and r >= 1, got p={p}, r={r}"
    elif g.n != p * r + 1:
        bad = f"order {g.n} differs from p*r+1 = {p * r + 1}"
    elif r >= 2 and p < 4 * r + 5:
        bad = f"p={p} < 4r+5 = {4 * r + 5}"
    if bad:
        trace.append(Step(0, "hypothesis", "check", {"n": g.n, "p": p, "r": r}))
        return Certificate(Kind.HYPOTHESIS, p, r, trace=tuple(trace), message=bad)
    try:
        kind, obj = _Solver(p, trace).solve(g, r, 0)
    except _Stuck as e:
        return Certificate(Kind.FAILURE, p, r, trace=tuple(trace), message=str(e))
    if kind == "cycle":
        return Certificate(Kind.CYCLE, p, r, cycle=obj, trace=tuple(trace))
    return Certificate(Kind.INDEPENDENT_SET, p, r, independent_set=frozenset(obj), trace=tuple(trace))


def cycle_around_saw(g: Graph, p: int, r: int, saw: Saw, cases: Iterable[str] | None = None) -> Certificate:
    """Run only the case analysis outside a given saw of order at most ``p``.

    The caller vouches for the state the driver would be in: ``g`` is
    2-connected with minimum degree at least ``p`` and independence number
    at most ``r``, and ``d(saw) >= p - r``.  ``cases`` restricts the
    constructions tried (names from :data:`CASES`), mainly for testing.
    """
    trace: list[Step] = []
    solver = _Solver(p, trace)
    solver.log("saw", "given", order=saw.size, k=saw.k, d=saw.degree, backbone=list(saw.backbone))
    try:
        cyc = _CaseRunner(solver, g, r, saw, cases).run()
    except _Stuck as e:
        return Certificate(Kind.FAILURE, p, r, trace=tuple(trace), message=str(e))
    return Certificate(Kind.CYCLE, p, r, cycle=cyc, trace=tuple(trace))


def _lift(result, labels):
    kind, obj = result
    if kind == "cycle":
        return kind, Cycle(tuple(labels[v] for v in obj.vertices))
    return kind, frozenset(labels[v] for v in obj)


def _runs(keys: Iterable[int]) -> list[tuple[int, int]]:
    """Maximal runs of consecutive integers, longest first."""
    ks = sorted(set(keys))
    out = []
    for q in ks:
        if out and q == out[-1][1] + 1:
            out[-1] = (out[-1][0], q)
        else:
            out.append((q, q))
    return sorted(out, key=lambda ab: (ab[0] - ab[1], ab[0]))


def _bfs_path(g: Graph, src: int, dst: int, within: set[int]) -> list[int] | None:
    prev = {src: None}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            out = []
            while x is not None:
                out.append(x)
                x = prev[x]
            return out[::-1]
        for y in sorted(g.adj[x]):
            if y in within and y not in prev:
                prev[y] = x
                queue.append(y)
    return None


@dataclass
class _Solver:
    p: int
    trace: list[Step]
    depth: int = 0

    def log(self, case: str, op: str, order: int | None = None, **params) -> None:
        self.trace.append(Step(self.depth, case, op, params, order))

    # ---- recursion on r

    def solve(self, g: Graph, r: int, depth: int):
        saved, self.depth = self.depth, depth
        try:
            return self._solve(g, r)
        finally:
            self.depth = saved

    def _recurse(self, g: Graph, vertices: list[int], r: int, case: str):
        h, labels = g.induced(vertices)
        self.log(case, "recurse", order=h.n, r=r, vertices=list(labels))
        return _lift(self.solve(h, r, self.depth + 1), labels)

    def _solve(self, g: Graph, r: int):
        p, n = self.p, g.n
        if r == 1:
            for a in range(n):
                for b in range(a + 1, n):
                    if b not in g.adj[a]:
                        self.log("base", "non_edge", order=2, pair=[a, b])
                        return "is", frozenset((a, b))
            self.log("base", "complete_graph", order=n)
            return "cycle", Cycle(tuple(range(n)))

        u = min(range(n), key=lambda w: (g.degree(w), w))
        far = sorted(set(range(n)) - g.adj[u] - {u})
        need = p * (r - 1) + 1
        if len(far) >= need:
            kind, obj = self._recurse(g, far[:need], r - 1, "min_degree_lift")
            if kind == "cycle":
                return kind, obj
            self.log("min_degree_lift", "add_vertex", order=len(obj) + 1, vertex=u)
            return "is", obj | {u}
        self.log("min_degree_lift", "min_degree", order=None, vertex=u, degree=g.degree(u))

        mis = max_independent_set(g, cap=n)
        self.log("independence", "max_independent_set", order=len(mis))
        if len(mis) > r:
            return "is", frozenset(sorted(mis)[: r + 1])

        found = self._connectivity(g, r)
        if found is not None:
            return found

        try:
            saw = find_saw(g, p, r, alpha_known=True)
        except CycleRamseyError as e:
            self.log("saw", "find_saw", error=str(e))
            raise _Stuck(f"find_saw failed: {e}") from None
        self.log("saw", "find_saw", order=saw.size, k=saw.k, d=saw.degree, backbone=list(saw.backbone))
        if saw.size >= p + 1:
            try:
                cyc = saw_cycle(saw, r, p + 1)
            except CycleRamseyError as e:
                self.log("saw", "saw_cycle", error=str(e))
                raise _Stuck(f"saw_cycle failed: {e}") from None
            self.log("saw", "saw_cycle", order=cyc.order, q=p + 1)
            return "cycle", cyc
        self.log("saw", "bounds", lower=p - r, d=saw.degree, saw_order=saw.size, upper=p)
        return "cycle", _CaseRunner(self, g, r, saw).run()

    def _connectivity(self, g: Graph, r: int):
        p = self.p
        comps = components(g)
        if len(comps) > 1:
            for c in comps:
                a = len(max_independent_set(g, c, cap=g.n))
                if len(c) >= p * a + 1:
                    kind, obj = self._recurse(g, sorted(c)[: p * a + 1], a, "disconnected")
                    if kind != "cycle":
                        raise _Stuck("recursion on a component returned an independent set above its alpha")
                    return kind, obj
            raise _Stuck("no component is large relative to its independence number")
        cuts = block_decomposition(g).cutvertices
        if not cuts:
            return None
        z = min(cuts)
        parts = components(g, set(range(g.n)) - {z})
        sides = [parts[0], frozenset().union(*parts[1:])]
        self.log("cutvertex", "split", order=None, cutvertex=z, sides=[len(s) for s in sides])
        found = []
        for side in sides:
            a = len(max_independent_set(g, side, cap=g.n))
            if len(side) >= p * a + 1:
                kind, obj = self._recurse(g, sorted(side)[: p * a + 1], a, "cutvertex")
                if kind != "cycle":
                    raise _Stuck("recursion on a side returned an independent set above its alpha")
                return kind, obj
        for side in sides:
            a = len(max_independent_set(g, side, cap=g.n))
            kind, obj = self._recurse(g, sorted(side | {z}), a, "cutvertex")
            if kind == "cycle":
                return kind, obj
            found.append(obj)
        merged = frozenset().union(*found)
        self.log("cutvertex", "merge_independent_sets", order=len(merged))
        if len(merged) >= r + 1:
            return "is", frozenset(sorted(merged)[: r + 1])
        raise _Stuck("both sides returned independent sets but their union is too small")


# --------------------------------------------------------------------------
# the case analysis outside the saw


class _CaseRunner:
    def __init__(self, solver: _Solver, g: Graph, r: int, saw: Saw, cases: Iterable[str] | None = None):
        self.enabled = set(CASES if cases is None else cases)
        unknown = self.enabled - set(CASES)
        if unknown:
            raise ValueError(f"unknown cases {sorted(unknown)}")
        self.s = solver
        self.g = g
        self.r = r
        self.p = solver.p
        self.saw = saw
        self.S = set(saw.backbone)
        self.rest = set(range(g.n)) - self.S
        self.attempts = 0
        self.errors: list[str] = []
        self._fam_cache: dict = {}

    def log(self, *a, **kw):
        self.s.log(*a, **kw)

    def run(self) -> Cycle:
        g, rest = self.g, self.rest
        comps = components(g, rest)
        whole = len(comps) == 1 and is_two_connected(g, rest)
        self.log("rest_two_connected" if whole else "rest_split", "dispatch", size=len(rest),
                 components=len(comps))
        ends = self.endblocks(comps)
        steps = [
            ("rest_two_connected", lambda: whole and self.case_two_connected()),
            ("consecutive_pair", lambda: self.case_consecutive(ends)),
            ("components", lambda: self.case_components(comps)),
            ("endblock", lambda: self.case_endblock(comps, ends)),
        ]
        for name, attempt in steps:
            if name in self.enabled:
                cyc = attempt()
                if cyc:
                    return cyc
        last = self.errors[-1] if self.errors else "no candidate crossing edges"
        raise _Stuck(f"no case produced a C_{self.p + 1} after {self.attempts} attempts; last: {last}")

    # ---- helpers

    def alpha(self, vs) -> int:
        return len(max_independent_set(self.g, vs, cap=self.g.n))

    def endblocks(self, comps) -> list[tuple[frozenset[int], int | None]]:
        """(block, cutvertex) pairs; whole 2-connected or tiny components get cutvertex None."""
        out = []
        for c in comps:
            if len(c) <= 2 or is_two_connected(self.g, c):
                out.append((c, None))
                continue
            bd = block_decomposition(self.g, c)
            for b in bd.endblocks():
                (z,) = bd.cutvertices_of(b)
                out.append((b, z))
        return sorted(out, key=lambda bz: (self.alpha(bz[0]), min(bz[0])))

    def path_in(self, vs, u, v, targets, exception=None) -> Path | None:
        """A u-v path inside ``vs`` of order at least the first reachable target."""
        h, labels = self.g.induced(sorted(vs))
        inv = {w: i for i, w in enumerate(labels)}
        for t in sorted(set(targets), reverse=True):
            t = max(t, 2)
            try:
                if exception is None or exception in (u, v):
                    p = path_at_least(h, inv[u], inv[v], t - 1, strict=False, budget=SEARCH_BUDGET)
                else:
                    p = path_one_exception(h, inv[exception], inv[u], inv[v], t - 1, strict=False,
                                           budget=SEARCH_BUDGET)
            except CycleRamseyError:
                continue
            return Path(tuple(labels[w] for w in p.vertices))
        return None

    def fam(self, key, build: Callable[[], OrderFamily]) -> OrderFamily | None:
        if key not in self._fam_cache:
            try:
                self._fam_cache[key] = build()
            except CycleRamseyError as e:
                self.errors.append(f"{key[0]}: {e}")
                self._fam_cache[key] = None
        return self._fam_cache[key]

    def pair_family(self, x: int, y: int) -> OrderFamily | None:
        def build():
            _, fam = any_pair_paths(self.saw, x, y)
            return fam
        return self.fam(("any_pair_paths", x, y), build)

    def splice(self, case, fam1, v2, x2, y2, head_fn, tail=(), fallback_order=2) -> Cycle | None:
        """Collate ``fam1`` (x1-y1 in the saw) with a chopped x2-y2 path outside it.

        ``head_fn(targets)`` returns the path to chop (from x2, ending at the
        start of ``tail``); ``tail`` is a fixed continuation ending at y2.
        """
        self.attempts += 1
        p, g = self.p, self.g
        keys1 = fam1.orders()
        need = p + 1 - max(keys1) - len(tail)
        head = head_fn([need, fallback_order - len(tail)])
        if head is None:
            self.errors.append(f"{case}: no long path between {x2} and {tail[-1] if tail else y2}")
            return None
        a2 = max(1, self.alpha(head.vertices))
        ladder = chop(g, head, a2)
        fam2 = OrderFamily(g, (x2, y2))
        for step in ladder.steps:
            fam2.add(step.vertices + tuple(tail))
        k = 2 * a2
        l1, l2 = 1 + len(tail), head.order + len(tail)
        for a, b in _runs(keys1):
            if b - a < k - 1:
                continue
            lo, hi = collate_range(fam2.orders(), a, b, l1, l2)
            if not lo <= p + 1 <= hi:
                continue
            x1, y1 = fam1.endpoints
            cyc = collate(g, self.S, v2, (x1, x2), (y1, y2), fam1, fam2, k, a, b, l1, l2, p + 1)
            self.log(case, "path", order=head.order, ends=[x2, head.vertices[-1]], tail=len(tail))
            self.log(case, "chop", order=len(ladder.steps), alpha=a2, orders=ladder.orders)
            self.log(case, "collate", order=cyc.order, a=a, b=b, k=k, l1=l1, l2=l2, s=p + 1,
                     x_edge=[x1, x2], y_edge=[y1, y2])
            return cyc
        self.errors.append(f"{case}: orders {keys1} and {fam2.orders()} do not reach {p + 1}")
        return None

    def exhausted(self) -> bool:
        return self.attempts >= MAX_ATTEMPTS

    # ---- the cases

    def case_two_connected(self) -> Cycle | None:
        saw, g, p, k = self.saw, self.g, self.p, self.saw.k
        a, b = saw.v(2 * k), saw.v(2 * k + 1)
        na = sorted(g.adj[a] & self.rest)
        nb = sorted(g.adj[b] & self.rest)

        def build():
            try:
                return endpair_paths(saw)
            except CycleRamseyError as e:
                self.log("rest_two_connected", "endpair_paths", error=str(e))
                return consecutive_pair_paths(saw, 2 * k)
        fam1 = self.fam(("endpair", a, b), build)
        self.log("rest_two_connected", "endpair_paths", order=max(fam1.orders()), orders=fam1.orders())
        pairs = [(x2, y2) for x2 in na for y2 in nb if x2 != y2]
        if not pairs:
            common = sorted(set(na) & set(nb))
            if common and p in fam1:
                cyc = Cycle(fam1[p].vertices + (common[0],))
                self.log("rest_two_connected", "common_neighbour", order=cyc.order, vertex=common[0])
                return cyc
            self.errors.append("rest_two_connected: no distinct neighbours outside the saw")
            return None
        for x2, y2 in pairs:
            if self.exhausted():
                break
            cyc = self.splice(
                "rest_two_connected", fam1, self.rest, x2, y2,
                lambda ts: self.path_in(self.rest, x2, y2, ts),
                fallback_order=p - 2 * k,
            )
            if cyc:
                return cyc
        return None

    def case_consecutive(self, ends) -> Cycle | None:
        saw, g, p, k, r = self.saw, self.g, self.p, self.saw.k, self.r
        n = saw.size
        for block, z in ends:
            if 2 * self.alpha(block) > r + 1:
                continue
            for j in range(1, n + 1):
                x1, y1 = saw.v(j), saw.v(j + 1)
                xs = sorted(g.adj[x1] & block)
                ys = sorted(g.adj[y1] & block)
                pairs = [(x2, y2) for x2 in xs for y2 in ys if x2 != y2]
                if not pairs:
                    continue
                fam1 = self.fam(("consecutive_pair_paths", j), lambda: consecutive_pair_paths(saw, j))
                self.log("consecutive_pair", "consecutive_pair_paths", order=max(fam1.orders()),
                         j=j, orders=fam1.orders())
                for x2, y2 in pairs:
                    if self.exhausted():
                        return None
                    cyc = self.splice(
                        "consecutive_pair", fam1, block, x2, y2,
                        lambda ts: self.path_in(block, x2, y2, ts, exception=z),
                        fallback_order=p - 2 * k,
                    )
                    if cyc:
                        return cyc
        return None

    def best_attached(self, vs) -> int:
        return min(vs, key=lambda w: (-len(self.g.adj[w] & self.S), w))

    def case_components(self, comps) -> Cycle | None:
        g, p = self.g, self.p
        single = [c for c in comps if len(c) <= 2 or is_two_connected(g, c)]
        for c in sorted(single, key=lambda c: (self.alpha(c), min(c))):
            u1 = self.best_attached(c)
            self.log("components", "select", order=len(c), alpha=self.alpha(c), vertex=u1)
            attached = [w for w in sorted(c) if g.adj[w] & self.S]
            for x2 in attached:
                for y2 in attached:
                    if x2 == y2:
                        continue
                    for x1 in sorted(g.adj[x2] & self.S):
                        for y1 in sorted(g.adj[y2] & self.S):
                            if x1 == y1:
                                continue
                            if self.exhausted():
                                return None
                            fam1 = self.pair_family(x1, y1)
                            if fam1 is None:
                                continue
                            cyc = self.splice(
                                "components", fam1, c, x2, y2,
                                lambda ts: self.path_in(c, x2, y2, ts, exception=u1),
                                fallback_order=p // 2 + 1,
                            )
                            if cyc:
                                return cyc
        return None

    def case_endblock(self, comps, ends) -> Cycle | None:
        g, p = self.g, self.p
        for block, z in ends:
            if z is None:
                continue
            comp = next(c for c in comps if z in c)
            inner = sorted(block - {z})
            u1 = self.best_attached(inner)
            self.log("endblock", "select", order=len(block), alpha=self.alpha(block), cutvertex=z, vertex=u1)
            cyc = self.endblock_outside(block, z, comp, u1) or self.endblock_inside(block, z, u1)
            if cyc:
                return cyc
        return None

    def endblock_outside(self, block, z, comp, u1) -> Cycle | None:
        g, p = self.g, self.p
        beyond = set(comp) - set(block) | {z}
        cands = []
        for u2 in sorted(set(comp) - set(block)):
            if g.adj[u2] & self.S:
                route = _bfs_path(g, z, u2, beyond)
                if route is not None:
                    cands.append((len(route), u2, route))
        for _, u2, route in sorted(cands):
            for x1 in sorted(g.adj[u1] & self.S):
                for x2 in sorted(g.adj[u2] & self.S):
                    if x1 == x2:
                        continue
                    if self.exhausted():
                        return None
                    fam1 = self.pair_family(x1, x2)
                    if fam1 is None:
                        continue
                    cyc = self.splice(
                        "endblock_outside", fam1, set(block) | beyond, u1, u2,
                        lambda ts: self.path_in(block, u1, z, ts, exception=u1),
                        tail=tuple(route[1:]),
                        fallback_order=p // 2 + 1 + len(route) - 1,
                    )
                    if cyc:
                        return cyc
        return None

    def endblock_inside(self, block, z, u1) -> Cycle | None:
        g, p = self.g, self.p
        for x1 in sorted(g.adj[u1] & self.S):
            for u2 in sorted(set(block) - {u1}):
                for x2 in sorted(g.adj[u2] & self.S):
                    if x2 == x1:
                        continue
                    if self.exhausted():
                        return None
                    fam1 = self.pair_family(x1, x2)
                    if fam1 is None:
                        continue
                    cyc = self.splice(
                        "endblock_inside", fam1, block, u1, u2,
                        lambda ts: self.path_in(block, u1, u2, ts, exception=z),
                        fallback_order=p,
                    )
                    if cyc:
                        return cyc
        return None
