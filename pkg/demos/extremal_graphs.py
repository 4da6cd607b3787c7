"""
Why p*r + 1 vertices are needed
===============================

``r`` disjoint copies of ``K_p`` have ``p*r`` vertices, no cycle longer than
``p`` and independence number ``r``.  One vertex fewer than the witness
needs, and neither outcome is present.
"""

from cycleramsey import all_cycle_orders, components, extremal_graph, independence_number

for p in range(3, 8):
    row = []
    for r in range(1, 4):
        g = extremal_graph(p, r)
        # a cycle never leaves its component; enumerate one clique at a time
        longest = max(max(all_cycle_orders(g.induced(c)[0])) for c in components(g))
        row.append(f"r={r}: n={g.n:>2} longest cycle {longest} alpha {independence_number(g)}")
    print(f"p={p}  " + " | ".join(row))
