"""
Saws and the paths inside them
==============================

A saw is a closed backbone ``v_1 .. v_{2k+1}`` with the chords
``v_{2s-1} v_{2s+1}``; its degree is the smaller inner degree of the last two
backbone vertices.  Dense graphs always contain one of high degree, and a saw
carries paths of many consecutive orders between prescribed vertices.
"""

from cycleramsey import independence_number, any_pair_paths, consecutive_pair_paths, endpair_paths, find_saw, saw_cycle
from cycleramsey.generators import clique_union_cross, saw_tail
from cycleramsey.rng import XorShift64Star

# extraction from a graph with min degree >= p and alpha <= r
g = clique_union_cross([14, 14], 20, XorShift64Star(5))
saw = find_saw(g, 13, 2)
print(f"found a saw on {saw.size} vertices with degree {saw.degree} (need >= {13 - 2})")
print("serialised:", saw.to_line()[:60], "...")

# a generated saw with a prescribed degree
s = saw_tail(5, 10, XorShift64Star(1), density=0.9)
k = s.k
print(f"\nsaw_tail: k={k}, degree {s.degree}")
print("v_2k - v_2k+1 orders:", endpair_paths(s).orders())
print("v_1 - v_2 orders:   ", consecutive_pair_paths(s, 1).orders())
l, fam = any_pair_paths(s, s.v(2), s.v(7))
print(f"v_2 - v_7: l={l}, orders {fam.orders()}")
r = independence_number(s.host, s.backbone)
for q in range(4 * r, 2 * k + 2):
    print(f"cycle of order {q:>2}:", saw_cycle(s, r, q).vertices)
