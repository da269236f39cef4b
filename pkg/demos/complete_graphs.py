"""
Complete oriented graphs: closed forms against the engine
=========================================================

"""

from monoreg.digraph import (
    WeightedOrientedGraph,
    complete_closure_reg,
    complete_graph_reg,
    edge_ideal,
    is_type_one,
)
from monoreg.newton import integral_closure
from monoreg.regularity import regularity

cycle = frozenset({(1, 2), (2, 3), (3, 1)})
transitive = frozenset({(1, 2), (1, 3), (2, 3)})

for edges, w in [(cycle, (6, 3, 5)), (transitive, (1, 1, 4)), (cycle, (2, 2, 2)), (cycle, (2, 1, 1)), (cycle, (1, 3, 3))]:
    g = WeightedOrientedGraph(3, edges, w)
    I = edge_ideal(g)
    print(
        "cyclic" if edges == cycle else "transitive", w,
        "type 1" if is_type_one(g) else "",
        "| reg", regularity(I).reg_ideal, "formula", complete_graph_reg(g),
        "| closure reg", regularity(integral_closure(I)).reg_ideal, "formula", complete_closure_reg(g),
    )

# the last two rows disagree: a non-source vertex of weight 1 breaks the closed form for reg(I),
# while max w + 1 for the closure still holds
