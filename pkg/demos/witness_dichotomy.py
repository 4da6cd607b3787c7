"""
Cycle or independent set
========================

A graph on ``p*r + 1`` vertices with ``p >= 4r + 5`` either contains a cycle
on exactly ``p + 1`` vertices or an independent set of ``r + 1`` vertices.
``ramsey_witness`` returns whichever it finds, together with a step trace.
"""

from cycleramsey import (
    Saw,
    clique_union_cross,
    cycle_around_saw,
    disjoint_union,
    empty_graph,
    extremal_graph,
    independence_number,
    ramsey_witness,
    verify_certificate,
)
from cycleramsey.rng import XorShift64Star

p, r = 13, 2

# Two cliques joined by a handful of random edges.  Both cliques are too small
# on their own, so the cycle has to cross between them.
g = clique_union_cross([13, 14], 40, XorShift64Star(0))
print(f"order {g.n}, {g.m} edges, independence number {independence_number(g)}")

cert = ramsey_witness(g, p, r)
print(cert.kind.value, "->", cert.cycle.vertices)
print("verifies:", bool(verify_certificate(g, p, r, cert)))

# The trace lists each construction that was tried, in order.
for step in cert.trace[:6]:
    print(f"  depth {step.depth}  {step.case:<20} {step.op:<18} {step.order}")

# The case analysis on its own: take a saw inside the first of three joined
# cliques and build a cycle of order 18 that leaves it.  It expects min degree
# at least p, so every vertex of a 17-clique needs a cross edge.
three = clique_union_cross([17, 17, 18], 150, XorShift64Star(0))
print(f"\nthree cliques: min degree {three.min_degree()}, alpha {independence_number(three)}")
saw = Saw(three, tuple(range(15)))
cert = cycle_around_saw(three, 17, 3, saw)
print(cert.kind.value, "->", cert.cycle.vertices)
print("constructions used:", sorted({s.case for s in cert.trace if s.op in ("collate", "common_neighbour")}))

# The extremal graph plus one extra vertex has no long cycle at all, so the
# answer has to be an independent set.
h = disjoint_union(extremal_graph(p, r), empty_graph(1))
cert = ramsey_witness(h, p, r)
print(cert.kind.value, "->", sorted(cert.independent_set))

# The same certificate as a JSON document, ready to be re-checked elsewhere.
print(cert.to_json()[:120], "...")
