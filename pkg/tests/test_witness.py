import json

import pytest

from cycleramsey.errors import ParseError
from cycleramsey.generators import clique_union_cross, extremal_graph
from cycleramsey.graph import (
    Cycle,
    Graph,
    all_cycle_orders,
    complete_graph,
    components,
    disjoint_union,
    empty_graph,
    independence_number,
    is_two_connected,
)
from cycleramsey.rng import XorShift64Star, derive
from cycleramsey.saws import Saw
from cycleramsey.witness import (
    Certificate,
    Kind,
    cycle_around_saw,
    ramsey_witness,
    verify_certificate,
)

from conftest import glued_cliques


def complement(g):
    return Graph(g.n, [(a, b) for a in range(g.n) for b in range(a + 1, g.n) if not g.has_edge(a, b)])


class TestExtremal:
    @pytest.mark.parametrize("p,r,m", [(4, 2, 12), (5, 3, 30), (3, 1, 3)])
    def test_shape(self, p, r, m):
        g = extremal_graph(p, r)
        assert (g.n, g.m) == (p * r, m)
        assert independence_number(g) == r
        assert max(all_cycle_orders(g)) == p

    def test_bad_parameters(self):
        with pytest.raises(ValueError):
            extremal_graph(2, 1)


class TestWitnessExamples:
    def test_complete_graph(self):
        g = complete_graph(27)
        c = ramsey_witness(g, 13, 2)
        assert c.kind == Kind.CYCLE and c.cycle.order == 14
        assert verify_certificate(g, 13, 2, c)

    def test_extremal_plus_isolated_vertex(self):
        g = disjoint_union(extremal_graph(13, 2), empty_graph(1))
        c = ramsey_witness(g, 13, 2)
        assert c.kind == Kind.INDEPENDENT_SET and len(c.independent_set) == 3
        assert 26 in c.independent_set
        assert verify_certificate(g, 13, 2, c)

    def test_two_cliques_with_cross_edges(self):
        g = clique_union_cross([13, 14], 5, XorShift64Star(3))
        assert independence_number(g) == 2
        c = ramsey_witness(g, 13, 2)
        assert c.kind == Kind.CYCLE and verify_certificate(g, 13, 2, c)

    def test_base_case(self):
        assert ramsey_witness(complete_graph(4), 3, 1).kind == Kind.CYCLE
        c = ramsey_witness(Graph(4, [(0, 1), (1, 2), (2, 3)]), 3, 1)
        assert c.kind == Kind.INDEPENDENT_SET and verify_certificate(Graph(4, [(0, 1), (1, 2), (2, 3)]), 3, 1, c)

    @pytest.mark.parametrize("n,p,r", [(10, 13, 2), (27, 12, 2), (7, 2, 3), (27, 13, 0)])
    def test_hypothesis_violations(self, n, p, r):
        c = ramsey_witness(complete_graph(n), p, r)
        assert c.kind == Kind.HYPOTHESIS and c.message and c.trace


class TestVerifyCertificate:
    def setup_method(self):
        self.g = complete_graph(27)
        self.cert = ramsey_witness(self.g, 13, 2)

    def test_tampered_cycle(self):
        vs = list(self.cert.cycle.vertices)
        outside = next(w for w in range(27) if w not in vs)
        g = Graph(27, [e for e in self.g.edges if outside not in e or e == (0, outside)])
        vs[3] = outside
        bad = Certificate(Kind.CYCLE, 13, 2, cycle=Cycle(tuple(vs)))
        assert verify_certificate(g, 13, 2, bad).reason == "not_adjacent"

    def test_reasons(self):
        g = disjoint_union(extremal_graph(13, 2), empty_graph(1))
        short = Certificate(Kind.INDEPENDENT_SET, 13, 2, independent_set=frozenset({0, 26}))
        assert verify_certificate(g, 13, 2, short).reason == "wrong_size"
        dep = Certificate(Kind.INDEPENDENT_SET, 13, 2, independent_set=frozenset({0, 1, 26}))
        assert verify_certificate(g, 13, 2, dep).reason == "not_independent"
        assert verify_certificate(self.g, 13, 2, Certificate(Kind.CYCLE, 13, 2)).reason == "missing_cycle"
        wrong = Certificate(Kind.CYCLE, 13, 2, cycle=Cycle(tuple(range(13))))
        assert verify_certificate(self.g, 13, 2, wrong).reason == "wrong_order"
        repeat = Certificate(Kind.CYCLE, 13, 2, cycle=Cycle(tuple(range(13)) + (0,)))
        assert verify_certificate(self.g, 13, 2, repeat).reason == "repeated_vertex"
        assert not verify_certificate(self.g, 13, 2, Certificate(Kind.FAILURE, 13, 2))


class TestCertificateDocument:
    def test_round_trip(self):
        g = clique_union_cross([13, 14], 5, XorShift64Star(3))
        c = ramsey_witness(g, 13, 2)
        doc = json.loads(c.to_json())
        assert doc["kind"] == "CycleFound" and doc["p"] == 13 and doc["r"] == 2
        assert {"case", "lemma", "params", "output_order"} <= set(doc["trace"][0])
        back = Certificate.from_json(c.to_json())
        assert back == c
        assert verify_certificate(g, 13, 2, back)

    def test_independent_set_round_trip(self):
        g = disjoint_union(extremal_graph(13, 2), empty_graph(1))
        c = ramsey_witness(g, 13, 2)
        assert Certificate.from_json(c.to_json()) == c

    @pytest.mark.parametrize("text", ["{", "[]", '{"schema": "other/9"}', '{"kind": "Nope"}'])
    def test_bad_documents(self, text):
        with pytest.raises(ParseError):
            Certificate.from_json(text)

    def test_trace_is_deterministic(self):
        g = clique_union_cross([17, 17, 18], 40, XorShift64Star(8))
        a, b = ramsey_witness(g, 17, 3), ramsey_witness(g, 17, 3)
        assert a.to_json() == b.to_json()


def random_instance(i):
    """Mixed families of order p*r+1 near the extremal structure."""
    rng = derive(101, i)
    kind = i % 4
    if kind == 0:
        return clique_union_cross([13, 14], rng.randint(0, 40), rng), 13, 2
    if kind == 1:
        return clique_union_cross([17, 17, 18], rng.randint(0, 60), rng), 17, 3
    if kind == 2:
        g, _ = glued_cliques(rng, [13, 7, 7], rng.random() * 0.3, rng.randint(0, 3))
        return g, 13, 2
    # a sparse-ish random graph whose complement is dense: alpha usually small
    n, p, r = 27, 13, 2
    edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.92]
    return Graph(n, edges), p, r


@pytest.mark.parametrize("i", range(60))
def test_total_and_sound(i):
    g, p, r = random_instance(i)
    c = ramsey_witness(g, p, r)
    assert c.kind in (Kind.CYCLE, Kind.INDEPENDENT_SET), c.message
    assert verify_certificate(g, p, r, c)
    # dichotomy: an independent set of size r+1 is only returned when one exists
    if independence_number(g, cap=g.n) <= r:
        assert c.kind == Kind.CYCLE


def saw_instances(which, count, seed):
    """Graphs in the state the case analysis expects, with a saw inside the first clique."""
    tries = 0
    while count:
        tries += 1
        rng = derive(seed, tries)
        p, r, sizes = (17, 3, [17, 17, 18]) if tries % 2 else (21, 4, [21, 20, 20, 24])
        bridges = 0 if which == "components" else rng.randint(1, 2)
        g, off = glued_cliques(rng, sizes, rng.random() * 0.25, bridges)
        if not (g.min_degree() >= p and is_two_connected(g) and independence_number(g, cap=g.n) <= r):
            continue
        verts = list(range(off[0], off[1]))
        rng.shuffle(verts)
        size = rng.choice([s for s in range(3, p + 1, 2) if s - 1 >= p - r])
        saw = Saw(g, tuple(verts[:size]))
        rest = set(range(g.n)) - set(saw.backbone)
        comps = components(g, rest)
        split = all(len(c) <= 2 or is_two_connected(g, c) for c in comps)
        wanted = {
            "components": split and len(comps) > 1,
            "endblock": not split,
            "rest_two_connected": len(comps) == 1 and is_two_connected(g, rest),
        }[which]
        if wanted:
            count -= 1
            yield g, p, r, saw


@pytest.mark.parametrize("which", ["rest_two_connected", "components", "endblock"])
def test_each_case_alone(which):
    for g, p, r, saw in saw_instances(which, 12, 13):
        c = cycle_around_saw(g, p, r, saw, cases=[which])
        assert c.kind == Kind.CYCLE, c.message
        assert verify_certificate(g, p, r, c)
        assert any(s.case == which for s in c.trace)


def test_unknown_case_name():
    g = complete_graph(27)
    with pytest.raises(ValueError):
        cycle_around_saw(g, 13, 2, Saw(g, tuple(range(13))), cases=["nope"])
