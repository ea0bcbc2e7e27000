"""
Dicks-Leary presentations
=========================

Generators are the edges; every triangle gives two relators. Collapsing a
spanning tree turns the cone on a graph back into the right-angled Artin
group on that graph.
"""

from bbdehn import complete, example_graph
from bbdehn.presentation import (
    abelian_rank,
    cone_raag_check,
    dicks_leary_presentation,
    export,
    spanning_tree_reduction,
    star_tree,
)
from bbdehn.structure import find_cone_vertex

k3 = complete(3)
p = dicks_leary_presentation(k3)
print(export(p))
print(export(spanning_tree_reduction(p, k3)))

g = example_graph("square_disk0")
hub = g.index("c")
q = spanning_tree_reduction(dicks_leary_presentation(g), g, star_tree(g, hub))
print(export(q))
print("RAAG on the base square:", cone_raag_check(find_cone_vertex(g)))
print("abelian rank", abelian_rank(q), "= |V| - 1 =", len(g) - 1)
