import math

import pytest
from hypothesis import assume, given, settings, strategies as st

from cycleramsey.errors import HypothesisViolated, OutOfRange
from cycleramsey.generators import saw_tail
from cycleramsey.graph import (
    Graph,
    all_cycle_orders,
    all_path_orders,
    complete_graph,
    petersen_graph,
    independence_number,
    path_orders_from,
    verify_certificate_part,
)
from cycleramsey.rng import XorShift64Star
from cycleramsey.saws import (
    Saw,
    any_pair_paths,
    backbone_reduction,
    consecutive_pair_paths,
    endpair_paths,
    find_saw,
    saw_cycle,
)


def clique_saw(n):
    return Saw(complete_graph(n), tuple(range(n)))


def assert_family(saw, fam, ends, orders):
    for q in orders:
        assert q in fam, q
        p = fam[q]
        assert p.order == q and p.ends == ends
        assert verify_certificate_part(saw.host, p)
        assert set(p.vertices) <= saw.vertices()


@st.composite
def tailed_saws(draw, min_k=2, max_k=6, min_d=None, densities=(0.0, 0.3, 0.6, 0.9)):
    k = draw(st.integers(min_k, max_k))
    lo = max(2, (min_d or (lambda k: 2))(k))
    assume(lo <= 2 * k)
    d = draw(st.integers(lo, 2 * k))
    seed = draw(st.integers(0, 10**6))
    density = draw(st.sampled_from(densities))
    try:
        return saw_tail(k, d, XorShift64Star(seed), density=density)
    except ValueError:
        assume(False)


class TestSawType:
    def test_check_reasons(self):
        assert clique_saw(5).check()
        assert Saw(complete_graph(4), (0, 1, 2, 3)).check().reason == "backbone_length"
        assert Saw(complete_graph(5), (0, 1, 1, 2, 3)).check().reason == "backbone_vertices"
        c5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
        assert Saw(c5, tuple(range(5))).check().reason == "missing_chord"
        assert Saw(c5, (0, 2, 1, 3, 4)).check().reason == "backbone_edge"

    def test_positions_are_cyclic(self):
        s = clique_saw(7)
        assert s.k == 3 and s.v(1) == 0 and s.v(8) == 0 and s.v(0) == 6 and s.pos(6) == 7

    def test_line_round_trip(self):
        s = saw_tail(4, 6, XorShift64Star(2), density=0.4)
        back = Saw.from_line(s.to_line())
        assert back == s and back.degree == 6


class TestFindSaw:
    def test_k9(self):
        s = find_saw(complete_graph(9), 6, 1)
        assert s.check() and s.degree >= 5

    def test_two_k8_sharing_three_vertices(self):
        edges = {(a, b) for a in range(8) for b in range(a + 1, 8)}
        edges |= {(a, b) for a in range(5, 13) for b in range(a + 1, 13)}
        g = Graph(13, edges)
        s = find_saw(g, 7, 2)
        assert s.check() and s.degree >= 5

    def test_low_degree(self):
        with pytest.raises(HypothesisViolated):
            find_saw(petersen_graph(), 6, 3)

    def test_large_alpha(self):
        g = Graph(8, [(a, b) for a in range(4) for b in range(4, 8)])  # K_{4,4}
        with pytest.raises(HypothesisViolated) as info:
            find_saw(g, 4, 1)
        assert len(info.value.witness) == 4


class TestBackboneReduction:
    def test_identity_and_single_chord(self):
        s = clique_saw(5)
        assert backbone_reduction(s, 1, 5, False, 5).vertices == (0, 1, 2, 3, 4)
        minimal = Saw(Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (2, 4)]), tuple(range(5)))
        assert backbone_reduction(minimal, 1, 5, False, 4).vertices == (0, 2, 3, 4)

    def test_bounds(self):
        s = clique_saw(7)
        with pytest.raises(OutOfRange):
            backbone_reduction(s, 1, 7, False, 4)
        with pytest.raises(OutOfRange):
            backbone_reduction(s, 5, 3, True, 8)

    @settings(max_examples=60, deadline=None)
    @given(tailed_saws(max_k=5), st.data())
    def test_all_legal_orders(self, s, data):
        n = s.size
        i = data.draw(st.integers(1, n))
        j = data.draw(st.integers(1, n).filter(lambda x: x != i))
        wrap = data.draw(st.booleans())
        forward = list(range(i, j + 1)) if i < j else list(range(i, n + 1)) + list(range(1, j + 1))
        arc = forward if (i > j) == wrap else (list(range(i, 0, -1)) + list(range(n, j - 1, -1)) if i < j else list(range(i, j - 1, -1)))
        l = len(arc)
        lo = l // 2 + 2 if wrap else (l + 1) // 2 + 1
        oracle = all_path_orders(s.host, s.v(i), s.v(j))
        for q in range(lo, l + 1):
            p = backbone_reduction(s, i, j, wrap, q)
            assert p.order == q and p.ends == (s.v(i), s.v(j))
            assert verify_certificate_part(s.host, p)
            assert set(p.vertices) <= set(s.labels(arc))
            assert q in oracle

    def test_full_backbone_corollary(self):
        s = saw_tail(3, 4, XorShift64Star(0))
        for q in range(5, 8):
            assert backbone_reduction(s, 1, 7, False, q).order == q


class TestEndpair:
    def test_k7(self):
        s = clique_saw(7)
        assert_family(s, endpair_paths(s), (5, 6), range(2, 8))

    def test_full_last_rows(self):
        s = saw_tail(4, 8, XorShift64Star(0))
        assert s.degree == 8
        assert_family(s, endpair_paths(s), (7, 8), range(2, 10))

    def test_low_degree(self):
        with pytest.raises(HypothesisViolated):
            endpair_paths(saw_tail(4, 4, XorShift64Star(0)))

    @settings(max_examples=60, deadline=None)
    @given(tailed_saws(min_d=lambda k: math.ceil(2 * (2 * k + 1) / 3)))
    def test_covers_every_order(self, s):
        k = s.k
        fam = endpair_paths(s)
        assert_family(s, fam, (s.v(2 * k), s.v(2 * k + 1)), range(2, 2 * k + 2))


class TestConsecutivePairs:
    def test_k7_first_pair(self):
        s = clique_saw(7)
        assert_family(s, consecutive_pair_paths(s, 1), (0, 1), [6, 7])

    def test_k5_saw_tail(self):
        s = saw_tail(5, 10, XorShift64Star(4), density=0.5)
        for j in range(1, 12):
            fam = consecutive_pair_paths(s, j)
            assert_family(s, fam, (s.v(j), s.v(j + 1)), range(6, 12))

    @settings(max_examples=60, deadline=None)
    @given(tailed_saws(max_k=6), st.data())
    def test_interval_against_oracle(self, s, data):
        k, d, n = s.k, s.degree, s.size
        j = data.draw(st.integers(1, n))
        fam = consecutive_pair_paths(s, j)
        lo = min(2 * k - d + 6, k + 2)
        assert_family(s, fam, (s.v(j), s.v(j + 1)), range(lo, n + 1))
        assert set(fam.orders()) <= all_path_orders(s.host, s.v(j), s.v(j + 1))


class TestAnyPair:
    def test_k13(self):
        s = clique_saw(13)
        for x, y in [(0, 1), (0, 6), (3, 11), (11, 12)]:
            l, fam = any_pair_paths(s, x, y)
            assert l == 13
            assert_family(s, fam, (x, y), [12, 13])

    def test_needs_degree_k(self):
        with pytest.raises(HypothesisViolated):
            any_pair_paths(saw_tail(5, 4, XorShift64Star(0)), 0, 1)

    @settings(max_examples=60, deadline=None)
    @given(tailed_saws(max_k=6, min_d=lambda k: k), st.data())
    def test_interval_against_oracle(self, s, data):
        d = s.degree
        x = data.draw(st.sampled_from(s.backbone))
        y = data.draw(st.sampled_from([w for w in s.backbone if w != x]))
        l, fam = any_pair_paths(s, x, y)
        assert l > d
        assert_family(s, fam, (x, y), range(l - math.ceil(d / 2) + 5, l + 1))
        assert set(fam.orders()) <= path_orders_from(s.host, x)[y]


class TestSawCycle:
    def test_k9_pancyclic(self):
        s = clique_saw(9)
        for q in range(4, 10):
            c = saw_cycle(s, 1, q)
            assert c.order == q and verify_certificate_part(s.host, c)

    def test_k13_eight_cycle(self):
        s = clique_saw(13)
        c = saw_cycle(s, 2, 8)
        assert c.order == 8 and verify_certificate_part(s.host, c)
        assert 8 in all_cycle_orders(s.host)

    def test_guards(self):
        with pytest.raises(HypothesisViolated):
            saw_cycle(clique_saw(5), 1, 4)
        with pytest.raises(OutOfRange):
            saw_cycle(clique_saw(9), 1, 3)
        with pytest.raises(HypothesisViolated):
            saw_cycle(saw_tail(4, 5, XorShift64Star(1)), 1, 5)

    @settings(max_examples=50, deadline=None)
    @given(tailed_saws(min_k=3, max_k=6, densities=(0.7, 0.85, 1.0)))
    def test_every_order_against_oracle(self, s):
        k = s.k
        r = independence_number(s.host, s.backbone)
        assume(2 * r <= k or 4 * r >= k + 1)
        assume(4 * r <= 2 * k + 1)
        cycles = all_cycle_orders(s.host)
        for q in range(4 * r, 2 * k + 2):
            c = saw_cycle(s, r, q)
            assert c.order == q and verify_certificate_part(s.host, c)
            assert set(c.vertices) <= s.vertices()
            assert q in cycles
