"""
Shortening paths and splicing them into cycles
==============================================

``chop`` repeatedly replaces a stretch of a path by a chord found among its
first ``2*alpha + 1`` vertices.  The orders of the resulting ladder leave no
gap of ``2*alpha`` or more, so every window of that width contains one.

``collate`` then joins paths from two disjoint vertex sets through two
crossing edges and picks the pair whose orders add up to the target.
"""

from cycleramsey import Graph, OrderFamily, chop, collate, complete_graph, independence_number
from cycleramsey.rng import XorShift64Star

rng = XorShift64Star(11)
n = 12
g = Graph(n, [(a, b) for a in range(n) for b in range(a + 1, n) if b == a + 1 or rng.random() < 0.35])
path = tuple(range(n))
alpha = independence_number(g)
ladder = chop(g, path, alpha)
print(f"alpha={alpha}; ladder orders {ladder.orders}")
for lo in range(1, n - 2 * alpha + 2):
    hi = lo + 2 * alpha - 1
    step = next(s for s in ladder.steps if lo <= s.order <= hi)
    print(f"  window [{lo:>2}, {hi:>2}] -> order {step.order}")

# Collating a triangle (orders 2..3 between 0 and 1) with a K_5 whose ladder
# reaches orders 2..5 between 3 and 4.
h = Graph(8, list(complete_graph(3).edges) + [(a + 3, b + 3) for a, b in complete_graph(5).edges] + [(0, 3), (1, 4)])
fam1 = OrderFamily.from_paths(h, 0, 1, [(0, 1), (0, 2, 1)])
fam2 = chop(h, (3, 5, 6, 7, 4), 1)
for s in range(6, 9):
    c = collate(h, range(3), range(3, 8), (0, 3), (1, 4), fam1, fam2, k=2, a=2, b=3, l1=2, l2=5, s=s)
    print(f"cycle of order {s}: {c.vertices}")
