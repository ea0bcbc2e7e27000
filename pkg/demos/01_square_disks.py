"""
Three square disks
==================

Each graph's flag complex is a triangulated disk with a square boundary.
The interior dimension grows 0, 1, 2 and the Dehn function follows as
n^2, n^3, n^4.
"""

from bbdehn import classify, example_graph, explain

for name in ("square_disk0", "square_disk1", "square_disk2"):
    g = example_graph(name)
    v = classify(g)
    print(f"== {name}: {len(g)} vertices, {g.edge_count} edges")
    print(explain(v))
    print()

# the first disk is a cone, a triple join and a wheel at once; all three
# routes give the same answer
v = classify(example_graph("square_disk0"))
print("exponent per applicable rule:", v.rule_exponents)
