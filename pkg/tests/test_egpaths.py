import pytest
from hypothesis import assume, given, settings, strategies as st

from cycleramsey.egpaths import (
    disjoint_paths_to,
    mirror_double,
    path_at_least,
    path_avoiding,
    path_one_exception,
    search_cycle,
)
from cycleramsey.errors import NotFound, PreconditionViolated
from cycleramsey.graph import (
    Graph,
    all_path_orders,
    complete_graph,
    components,
    cycle_graph,
    is_two_connected,
    path_graph,
    verify_certificate_part,
)

from conftest import graphs


def assert_long_path(g, p, u, v, delta):
    assert verify_certificate_part(g, p)
    assert p.ends == (u, v)
    assert p.order >= delta + 1


def theta(a, b, c):
    """Two hubs 0 and 1 joined by three internally disjoint paths with a, b, c inner vertices."""
    edges, nxt = [], 2
    for length in (a, b, c):
        chain = [0] + list(range(nxt, nxt + length)) + [1]
        nxt += length
        edges += list(zip(chain, chain[1:]))
    return Graph(nxt, edges)


def wheel(rim):
    return Graph(rim + 1, [(0, i) for i in range(1, rim + 1)] + [(i, i % rim + 1) for i in range(1, rim + 1)])


class TestPathAtLeast:
    def test_complete(self):
        assert_long_path(complete_graph(5), path_at_least(complete_graph(5), 0, 1, 4), 0, 1, 4)

    def test_cycle_far_side(self):
        p = path_at_least(cycle_graph(6), 0, 1, 2)
        assert p.order == 6

    def test_theta(self):
        g = theta(1, 2, 3)
        p = path_at_least(g, 0, 1, 2)
        assert_long_path(g, p, 0, 1, 2)
        assert p.order in {3, 4, 5}
        assert path_at_least(g, 0, 1, 4, strict=False).order == 5

    def test_wheel(self):
        g = wheel(6)
        p = path_at_least(g, 1, 4, 3)
        assert_long_path(g, p, 1, 4, 3)

    def test_requires_two_connected(self):
        with pytest.raises(PreconditionViolated):
            path_at_least(path_graph(4), 0, 3, 1)

    def test_requires_degree(self):
        g = complete_graph(5)
        with pytest.raises(PreconditionViolated):
            path_at_least(g, 0, 1, 5)

    def test_same_endpoints(self):
        with pytest.raises(ValueError):
            path_at_least(complete_graph(4), 2, 2, 1)

    @settings(max_examples=120, deadline=None)
    @given(graphs(min_n=3, max_n=9), st.data())
    def test_guarantee_against_oracle(self, g, data):
        assume(is_two_connected(g))
        u = data.draw(st.integers(0, g.n - 1))
        v = data.draw(st.integers(0, g.n - 1).filter(lambda w: w != u))
        delta = min(g.degree(w) for w in range(g.n) if w not in (u, v)) if g.n > 2 else 0
        p = path_at_least(g, u, v, delta)
        assert_long_path(g, p, u, v, delta)
        assert p.order in all_path_orders(g, u, v)


class TestPathAvoiding:
    def test_two_k4_glued_on_a_pair(self):
        # K4 on {0,1,2,3} and K4 on {0,1,4,5}, with the shared edge removed
        edges = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (1, 4), (1, 5), (4, 5)]
        g = Graph(6, edges)
        p = path_avoiding(g, 0, 1, {4, 5}, 3)
        assert_long_path(g, p, 0, 1, 3)
        assert not set(p.vertices) & {4, 5}

    def test_avoid_must_be_a_component(self):
        edges = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (1, 4), (1, 5), (4, 5)]
        g = Graph(6, edges)
        with pytest.raises(PreconditionViolated):
            path_avoiding(g, 0, 1, {4}, 2)
        with pytest.raises(PreconditionViolated):
            path_avoiding(g, 0, 1, {2, 3, 4, 5}, 2)

    def test_mirror_double_shape(self):
        g = complete_graph(4)
        d, proj = mirror_double(g, 0, 1, [2, 3])
        assert d.n == 6
        assert sorted(proj) == [0, 1, 2, 2, 3, 3]
        assert not is_two_connected(d) or components(d, set(range(2, 6))) != []

    @settings(max_examples=80, deadline=None)
    @given(graphs(min_n=3, max_n=6), graphs(min_n=1, max_n=6))
    def test_on_glued_pairs(self, left, right):
        # glue two graphs along hubs 0 and 1; every inner vertex sees both hubs
        n1 = left.n
        edges = list(left.edges) + [(0, 2 + i) for i in range(n1 - 2)] + [(1, 2 + i) for i in range(n1 - 2)]
        shift = lambda w: n1 + w
        edges += [(shift(a), shift(b)) for a, b in right.edges]
        edges += [(0, shift(i)) for i in range(right.n)] + [(1, shift(i)) for i in range(right.n)]
        g = Graph(n1 + right.n, {tuple(sorted(e)) for e in edges if e[0] != e[1]} - {(0, 1)})
        assume(is_two_connected(g))
        avoid = set(range(n1, n1 + right.n))
        assume(set(range(2, n1)))
        delta = min(g.degree(w) for w in range(2, g.n))
        p = path_avoiding(g, 0, 1, avoid, delta)
        assert_long_path(g, p, 0, 1, delta)
        assert not set(p.vertices) & avoid


class TestPathOneException:
    def test_k6_with_weak_vertex(self):
        # K6 with vertex 5 cut down to degree 2
        g = Graph(6, [e for e in complete_graph(6).edges if 5 not in e or e in {(0, 5), (1, 5)}])
        for u, v in [(0, 1), (2, 3), (0, 2)]:
            p = path_one_exception(g, 5, u, v, 4)
            assert_long_path(g, p, u, v, 4)

    def test_weak_vertex_as_endpoint(self):
        g = Graph(6, [e for e in complete_graph(6).edges if 5 not in e or e in {(0, 5), (1, 5)}])
        assert_long_path(g, path_one_exception(g, 5, 5, 2, 4), 5, 2, 4)

    def test_requires_degree(self):
        with pytest.raises(PreconditionViolated):
            path_one_exception(cycle_graph(5), 0, 1, 2, 3)

    @pytest.mark.parametrize("budget", [None, 1])
    @settings(max_examples=100, deadline=None)
    @given(g=graphs(min_n=3, max_n=9), data=st.data())
    def test_guarantee_both_routes(self, budget, g, data):
        # budget=1 forces the structural assembly instead of the direct search
        assume(is_two_connected(g))
        x = min(range(g.n), key=lambda w: (g.degree(w), w))
        u = data.draw(st.integers(0, g.n - 1))
        v = data.draw(st.integers(0, g.n - 1).filter(lambda w: w != u))
        delta = min(g.degree(w) for w in range(g.n) if w != x)
        p = path_one_exception(g, x, u, v, delta, budget=budget)
        assert_long_path(g, p, u, v, delta)


def test_search_cycle_and_disjoint_paths():
    g = cycle_graph(7)
    c = search_cycle(g, 7)
    assert sorted(c) == list(range(7))
    assert search_cycle(path_graph(5), 3) is None
    legs = disjoint_paths_to(complete_graph(5), [0, 1], [3, 4])
    assert len(legs) == 2 and {legs[0][-1], legs[1][-1]} == {3, 4}
    assert disjoint_paths_to(path_graph(5), [0, 1], [4]) is None
