"""
Radicals of colon ideals on a ten-vertex weighted graph
=======================================================

"""

from monoreg.digraph import (
    closure_radical_formula,
    edge_ideal,
    minimal_capacity_sets,
    neighbor_intersection_ideal,
)
from monoreg.newton import integral_closure
from monoreg.verify import EXAMPLE_EXPONENT, example_graph

g = example_graph()
I = edge_ideal(g)
print(len(I.gens), "generators:", I)

a = EXAMPLE_EXPONENT
# supp a = {7, 8, 9, 10} are independent sinks; capacities decide which neighbourhoods enter
for cs in minimal_capacity_sets(g, a):
    print(sorted(cs.vertices), "capacity", cs.capacity, "->", neighbor_intersection_ideal(g, cs.vertices))

# closed form versus the direct route through the integral closure (a few seconds)
closed = closure_radical_formula(g, a)
direct = integral_closure(I).colon(a).radical()
print("closed form:", closed)
print("agrees with direct computation:", closed == direct)
