"""
Long paths between fixed endpoints
==================================

In a 2-connected graph where every vertex other than the endpoints has
degree at least ``delta``, some path between the endpoints has at least
``delta + 1`` vertices.  Variants allow avoiding a component of ``G - u - v``
or one low-degree vertex anywhere.
"""

from cycleramsey import path_at_least, path_avoiding, path_one_exception
from cycleramsey.generators import two_connected_random
from cycleramsey.graph import Graph, complete_graph
from cycleramsey.rng import XorShift64Star

g = two_connected_random(11, 4, XorShift64Star(2), extra=0.1)
p = path_at_least(g, 0, 1, 4)
print(f"min degree {g.min_degree()}: path of order {p.order} from 0 to 1: {p.vertices}")

# two K_4s glued along {0, 1}, minus the edge 01
two = Graph(6, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (1, 4), (1, 5), (4, 5)])
print("avoiding {4, 5}:", path_avoiding(two, 0, 1, {4, 5}, 3).vertices)

# K_6 with vertex 5 cut down to two neighbours
weak = Graph(6, [e for e in complete_graph(6).edges if 5 not in e or e in {(0, 5), (1, 5)}])
print("one weak vertex:", path_one_exception(weak, 5, 2, 3, 4).vertices)
# with a tiny search budget the structural fallback assembles the path instead
print("structural route:", path_one_exception(weak, 5, 2, 3, 4, budget=1).vertices)
