"""Randomized property suites: each guaranteed interval against brute-force oracles.

Every suite draws ``trials`` instances from per-trial streams
``derive(seed, i)``, so trial ``i`` is reproducible on its own.  A trial
passes when the claimed interval is produced by the implementation *and*
every order in it is confirmed by an exhaustive oracle.

The claimed bounds live in the small ``*_interval`` functions below so a
test can monkeypatch one and confirm the suite notices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .chopping import OrderFamily, chop, collate, reduction_in_interval
from .egpaths import path_at_least, path_avoiding, path_one_exception
from .generators import clique_union_cross, saw_tail, two_connected_random
from .graph import (
    Graph,
    Path,
    all_cycle_orders,
    all_path_orders,
    independence_number,
    is_connected,
    is_two_connected,
    path_of_order,
    path_orders_from,
    verify_certificate_part,
)
from .rng import XorShift64Star, derive
from .saws import (
    Saw,
    any_pair_paths,
    backbone_reduction,
    consecutive_pair_paths,
    endpair_paths,
    find_saw,
    saw_cycle,
)

# --------------------------------------------------------------------------
# claimed bounds


def chop_window(alpha: int) -> int:
    return 2 * alpha


def collate_interval(a: int, b: int, k: int, l1: int, l2: int) -> tuple[int, int]:
    return a + l1 + k, b + l2


def long_path_order(delta: int) -> int:
    return delta + 1


def pr1_interval(l: int, uses_wrap: bool) -> tuple[int, int]:
    return (l // 2 + 2, l) if uses_wrap else ((l + 1) // 2 + 1, l)


def super_interval(k: int) -> tuple[int, int]:
    return 2, 2 * k + 1


def lux_interval(k: int, d: int) -> tuple[int, int]:
    return 2 * k - d + 6, 2 * k + 1


def flat_interval(l: int, d: int) -> tuple[int, int]:
    return l - math.ceil(d / 2) + 5, l


def saw_cycle_interval(k: int, r: int) -> tuple[int, int]:
    return 4 * r, 2 * k + 1


# --------------------------------------------------------------------------
# reporting


@dataclass
class SuiteReport:
    name: str
    trials: int
    failures: list[tuple[int, str]] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> int:
        return self.trials - len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        lines = [f"{self.name}: {self.passed}/{self.trials} passed"]
        for key, value in sorted(self.notes.items()):
            lines.append(f"  {key}: {value}")
        if self.failures:
            i, msg = self.failures[0]
            lines.append(f"  first counterexample (trial {i}): {msg}")
        return "\n".join(lines)


class _Fail(Exception):
    pass


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise _Fail(msg)


def _run(name: str, trials: int, seed: int, trial: Callable[[XorShift64Star, dict], None]) -> SuiteReport:
    report = SuiteReport(name, trials)
    for i in range(trials):
        try:
            trial(derive(seed, i), report.notes)
        except _Fail as e:
            report.failures.append((i, str(e)))
        except Exception as e:  # any crash inside a trial is a failed trial
            report.failures.append((i, f"{type(e).__name__}: {e}"))
    return report


def _random_graph(n: int, density: float, rng: XorShift64Star) -> Graph:
    return Graph(n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < density])


def _check_path(g: Graph, p: Path, ends: tuple[int, int], what: str) -> None:
    _expect(bool(verify_certificate_part(g, p)), f"{what} is not a path: {p.vertices}")
    _expect(p.ends == ends, f"{what} has ends {p.ends}, expected {ends}")


# --------------------------------------------------------------------------
# chopping and collating


def check_chop(trials: int = 500, seed: int = 7, max_n: int = 12) -> SuiteReport:
    def trial(rng, notes):
        while True:
            n = rng.randint(3, max(3, max_n))
            g = _random_graph(n, 0.2 + 0.7 * rng.random(), rng)
            start = rng.below(n)
            if g.adj[start]:
                break
        walk = [start]
        for _ in range(2):  # extend both ends until stuck: a maximal path
            while True:
                free = sorted(g.adj[walk[-1]] - set(walk))
                if not free:
                    break
                walk.append(rng.choice(free))
            walk.reverse()
        path = Path(tuple(walk))
        alpha = independence_number(g)
        ladder = chop(g, path, alpha)
        oracle = all_path_orders(g, *path.ends)
        prev = None
        for step in ladder.steps:
            _check_path(g, step, path.ends, "ladder step")
            _expect(set(step.vertices) <= set(walk), "ladder step leaves the path")
            _expect(step.order in oracle, f"order {step.order} missing from the oracle")
            _expect(prev is None or step.order < prev, "ladder orders do not decrease")
            prev = step.order
        w = chop_window(alpha)
        for lo in range(1, path.order - w + 2):
            step = reduction_in_interval(ladder, lo, lo + w - 1)
            _expect(lo <= step.order <= lo + w - 1, f"window [{lo}, {lo + w - 1}] answered by {step.order}")
        notes["windows_checked"] = notes.get("windows_checked", 0) + max(0, path.order - w + 1)

    return _run("chop", trials, seed, trial)


def _collate_instance(rng: XorShift64Star, max_n: int):
    while True:
        n = rng.randint(8, max(8, max_n))
        n1 = rng.randint(3, n - 3)
        g1 = _random_graph(n1, 0.4 + 0.5 * rng.random(), rng)
        g2 = _random_graph(n - n1, 0.4 + 0.5 * rng.random(), rng)
        edges = list(g1.edges) + [(a + n1, b + n1) for a, b in g2.edges] + [(0, n1), (1, n1 + 1)]
        g = Graph(n, edges)
        v1, v2 = range(n1), range(n1, n)
        fam1 = OrderFamily(g, (0, 1))
        for q in range(2, n1 + 1):
            p = path_of_order(g, 0, 1, q, v1)
            if p is not None:
                fam1.add(p)
        p2 = next((path_of_order(g, n1, n1 + 1, q, v2) for q in range(n - n1, 1, -1)
                   if path_of_order(g, n1, n1 + 1, q, v2) is not None), None)
        if p2 is None or not fam1.orders():
            continue
        alpha2 = independence_number(g, p2.vertices)
        k = 2 * alpha2
        runs = _runs(fam1.orders())
        a, b = max(runs, key=lambda ab: (ab[1] - ab[0], -ab[0]))
        if b - a < k - 1:
            continue
        return g, set(v1), set(v2), fam1, chop(g, p2, alpha2), k, a, b


def _runs(keys):
    out = []
    for q in sorted(keys):
        if out and q == out[-1][1] + 1:
            out[-1] = (out[-1][0], q)
        else:
            out.append((q, q))
    return out


def check_collate(trials: int = 100, seed: int = 11, max_n: int = 14) -> SuiteReport:
    def trial(rng, notes):
        g, v1, v2, fam1, ladder, k, a, b = _collate_instance(rng, max_n)
        l1, l2 = 1, ladder.steps[0].order
        lo, hi = collate_interval(a, b, k, l1, l2)
        oracle = all_cycle_orders(g)
        x2, y2 = ladder.steps[0].ends
        for s in range(lo, hi + 1):
            cyc = collate(g, v1, v2, (0, x2), (1, y2), fam1, ladder, k, a, b, l1, l2, s)
            _expect(cyc.order == s, f"asked for {s}, got a cycle of order {cyc.order}")
            _expect(bool(verify_certificate_part(g, cyc)), f"order {s}: not a cycle {cyc.vertices}")
            _expect(s in oracle, f"order {s} missing from the cycle oracle")
        notes["cycles_checked"] = notes.get("cycles_checked", 0) + max(0, hi - lo + 1)

    return _run("collate", trials, seed, trial)


# --------------------------------------------------------------------------
# long paths


def _eg_plain(rng, max_n):
    n = rng.randint(4, max(4, max_n))
    g = two_connected_random(n, rng.randint(2, n - 1), rng, extra=0.3 * rng.random())
    for u in range(n):
        orders = path_orders_from(g, u)
        for v in range(u + 1, n):
            delta = min(g.degree(w) for w in range(n) if w not in (u, v))
            p = path_at_least(g, u, v, delta)
            _check_path(g, p, (u, v), "long path")
            _expect(p.order >= long_path_order(delta), f"{u}-{v}: order {p.order} < {long_path_order(delta)}")
            _expect(p.order in orders[v], f"{u}-{v}: order {p.order} missing from the oracle")


def _eg_avoiding(rng, max_n):
    while True:
        n = rng.randint(6, max(6, max_n))
        a = rng.randint(2, n - 4)
        parts = [range(2, 2 + a), range(2 + a, n)]
        edges = []
        for part in parts:
            vs = list(part)
            for i, x in enumerate(vs):
                for y in vs[i + 1:]:
                    if rng.random() < 0.7:
                        edges.append((x, y))
            for hub in (0, 1):
                edges.extend((hub, x) for x in rng.sample(vs, rng.randint(1, len(vs))))
        if rng.random() < 0.5:
            edges.append((0, 1))
        g = Graph(n, edges)
        if is_two_connected(g):
            break
    avoid = set(parts[0])
    keep = [w for w in range(n) if w not in avoid]
    delta = min(g.degree(w) for w in range(2, n))
    p = path_avoiding(g, 0, 1, avoid, delta)
    _check_path(g, p, (0, 1), "avoiding path")
    _expect(not set(p.vertices) & avoid, "path enters the avoided part")
    _expect(p.order >= long_path_order(delta), f"order {p.order} < {long_path_order(delta)}")
    h, labels = g.induced(keep)
    _expect(p.order in all_path_orders(h, labels.index(0), labels.index(1)), "order missing from the oracle")


def _eg_one_exception(rng, max_n):
    while True:
        n = rng.randint(5, max(5, max_n))
        g = two_connected_random(n, rng.randint(3, n - 1), rng, extra=0.3 * rng.random())
        x = rng.below(n)
        edges = set(g.edges)
        for y in sorted(g.adj[x]):
            trimmed = Graph(n, edges - {(min(x, y), max(x, y))})
            if rng.random() < 0.6 and trimmed.degree(x) >= 2 and is_two_connected(trimmed):
                edges = set(trimmed.edges)
        g = Graph(n, edges)
        if is_two_connected(g):
            break
    delta = min(g.degree(w) for w in range(n) if w != x)
    for u in range(n):
        orders = path_orders_from(g, u)
        for v in range(u + 1, n):
            p = path_one_exception(g, x, u, v, delta)
            _check_path(g, p, (u, v), "long path")
            _expect(p.order >= long_path_order(delta), f"{u}-{v}: order {p.order} < {long_path_order(delta)}")
            _expect(p.order in orders[v], f"{u}-{v}: order {p.order} missing from the oracle")


EG_VARIANTS = {"plain": _eg_plain, "avoiding": _eg_avoiding, "one_exception": _eg_one_exception}


def check_erdos_gallai(trials: int = 300, seed: int = 3, max_n: int = 11, variant: str = "all") -> SuiteReport:
    """``variant`` is one of ``plain``, ``avoiding``, ``one_exception`` or ``all`` (round robin)."""
    names = list(EG_VARIANTS) if variant == "all" else [variant]

    def trial(rng, notes):
        name = names[rng.below(len(names))] if len(names) > 1 else names[0]
        notes[name] = notes.get(name, 0) + 1
        EG_VARIANTS[name](rng, max_n)

    label = "erdos_gallai" if variant == "all" else f"erdos_gallai[{variant}]"
    return _run(label, trials, seed, trial)


# --------------------------------------------------------------------------
# saws


def check_saw_find(trials: int = 200, seed: int = 5, max_n: int = 30) -> SuiteReport:
    def trial(rng, notes):
        r = rng.randint(1, 3)
        p = rng.randint(2, max(2, max_n // r - 1))
        sizes = []
        for _ in range(r):
            room = max_n - sum(sizes) - (r - len(sizes) - 1) * (p + 1)
            sizes.append(rng.randint(p + 1, max(p + 1, min(room, p + 4))))
        owner = [i for i, s in enumerate(sizes) for _ in range(s)]
        n = len(owner)
        cross = sum(1 for a in range(n) for b in range(a + 1, n) if owner[a] != owner[b])
        g = clique_union_cross(sizes, rng.randint(0, min(cross, 3 * n)), rng)
        saw = find_saw(g, p, r)
        _expect(bool(saw.check()), f"saw fails its invariant check: {saw.check().reason}")
        inner = set(saw.backbone)
        d = min(len(g.adj[saw.backbone[-1]] & inner), len(g.adj[saw.backbone[-2]] & inner))
        _expect(d >= p - r, f"saw degree {d} < p - r = {p - r}")

    return _run("saw_find", trials, seed, trial)


def _saw_instance(rng: XorShift64Star, max_n: int, accept: Callable[[Saw], bool], min_k: int = 2) -> Saw:
    top = max(min_k, (max_n - 1) // 2)
    for _ in range(10_000):
        k = rng.randint(min_k, top)
        d = rng.randint(3, 2 * k)
        try:
            saw = saw_tail(k, d, rng, density=rng.random() * 0.9)
        except ValueError:
            continue
        if accept(saw):
            return saw
    raise RuntimeError("could not sample a saw meeting the hypothesis")


def _saw_oracle(saw: Saw) -> dict[tuple[int, int], set[int]]:
    h, labels = saw.graph()
    out = {}
    for a in range(h.n):
        for b, orders in path_orders_from(h, a).items():
            out[(labels[a], labels[b])] = orders
    return out


def _covered(name: str, saw: Saw, fam: OrderFamily, lo: int, hi: int, oracle) -> None:
    fam.validate(saw.backbone)
    x, y = fam.endpoints
    for q in range(max(lo, 2), hi + 1):
        _expect(q in fam, f"{name}: order {q} missing for pair {x}-{y} in saw {saw.to_line()}")
        _expect(q in oracle[(x, y)], f"{name}: order {q} not in the oracle for pair {x}-{y}")


def check_pr1(trials: int = 200, seed: int = 1, max_n: int = 13) -> SuiteReport:
    def trial(rng, notes):
        saw = _saw_instance(rng, max_n, lambda s: True)
        oracle = _saw_oracle(saw)
        n = saw.size
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                for wrap in (False, True):
                    fwd_wraps = j < i  # walking up from i reaches j through v_n -> v_1
                    l = (j - i) % n + 1 if fwd_wraps == wrap else (i - j) % n + 1
                    lo, hi = pr1_interval(l, wrap)
                    for q in range(lo, hi + 1):
                        p = backbone_reduction(saw, i, j, wrap, q)
                        _check_path(saw.host, p, (saw.v(i), saw.v(j)), "reduction")
                        _expect(p.order == q, f"reduction of order {p.order}, wanted {q}")
                        _expect(q in oracle[(saw.v(i), saw.v(j))], f"order {q} not in the oracle")
        notes["corollary_checked"] = notes.get("corollary_checked", 0) + 1
        for q in range(saw.k + 2, n + 1):
            p = backbone_reduction(saw, 1, n, False, q)
            _expect(p.order == q, "full-backbone reduction has the wrong order")

    return _run("pr1", trials, seed, trial)


def check_super(trials: int = 200, seed: int = 2, max_n: int = 13) -> SuiteReport:
    def trial(rng, notes):
        saw = _saw_instance(rng, max_n, lambda s: 3 * s.degree >= 2 * s.size)
        oracle = _saw_oracle(saw)
        lo, hi = super_interval(saw.k)
        _covered("super", saw, endpair_paths(saw), lo, hi, oracle)

    return _run("super", trials, seed, trial)


def check_lux(trials: int = 200, seed: int = 1, max_n: int = 13) -> SuiteReport:
    def trial(rng, notes):
        saw = _saw_instance(rng, max_n, lambda s: True)
        oracle = _saw_oracle(saw)
        lo, hi = lux_interval(saw.k, saw.degree)
        for j in range(1, saw.size + 1):
            _covered("lux", saw, consecutive_pair_paths(saw, j), lo, hi, oracle)

    return _run("lux", trials, seed, trial)


def check_flat(trials: int = 200, seed: int = 4, max_n: int = 13) -> SuiteReport:
    def trial(rng, notes):
        saw = _saw_instance(rng, max_n, lambda s: s.degree >= s.k)
        oracle = _saw_oracle(saw)
        d = saw.degree
        for x in saw.backbone:
            for y in saw.backbone:
                if x == y:
                    continue
                l, fam = any_pair_paths(saw, x, y)
                _expect(l > d, f"flat: l={l} is not above d={d}")
                lo, hi = flat_interval(l, d)
                _covered("flat", saw, fam, lo, hi, oracle)
                floor_lo = l - d // 2 + 5
                holds = all(q in fam for q in range(max(floor_lo, 2), l + 1))
                notes["floor_form_pairs"] = notes.get("floor_form_pairs", 0) + 1
                notes["floor_form_holds"] = notes.get("floor_form_holds", 0) + int(holds)

    return _run("flat", trials, seed, trial)


def check_saw_cycles(trials: int = 200, seed: int = 6, max_n: int = 13) -> SuiteReport:
    def trial(rng, notes):
        def accept(s):
            return s.k >= 3 and 4 * independence_number(s.host, s.backbone) <= s.size
        saw = _saw_instance(rng, max_n, accept, min_k=3)
        alpha = independence_number(saw.host, saw.backbone)
        r = rng.randint(alpha, saw.size // 4)
        h, labels = saw.graph()
        oracle = all_cycle_orders(h)
        lo, hi = saw_cycle_interval(saw.k, r)
        for q in range(lo, hi + 1):
            cyc = saw_cycle(saw, r, q)
            _expect(cyc.order == q, f"asked for {q}, got {cyc.order}")
            _expect(bool(verify_certificate_part(saw.host, cyc)), f"order {q}: not a cycle")
            _expect(set(cyc.vertices) <= set(saw.backbone), "cycle leaves the saw")
            _expect(q in oracle, f"order {q} not in the cycle oracle")

    return _run("saw_cycles", trials, seed, trial)


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "chop": check_chop,
    "collate": check_collate,
    "erdos_gallai": check_erdos_gallai,
    "saw_find": check_saw_find,
    "pr1": check_pr1,
    "super": check_super,
    "lux": check_lux,
    "flat": check_flat,
    "saw_cycles": check_saw_cycles,
}


def run_suite(name: str, trials: int, seed: int, max_n: int) -> SuiteReport:
    if name not in SUITES:
        raise ValueError(f"unknown lemma suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](trials=trials, seed=seed, max_n=max_n)
