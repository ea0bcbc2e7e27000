"""
A graph that is not a disk
==========================

The double of K4s has tetrahedra, so its flag complex is not a disk, yet its
H1 vanishes. An induced suspension of a path of length 3 retracts onto a
cubic subgroup, so the Dehn function sits between n^3 and n^4.
"""

from bbdehn import build_flag_complex, classify, example_graph, explain, homology_gate, recognize_disk
from bbdehn.structure import search_induced_square_subdisk

g = example_graph("double_k4")
c = build_flag_complex(g)
print("f-vector", c.f_vector)
print("disk?", recognize_disk(c).to_json())
print("H1 trivial?", homology_gate(c).h1_trivial)

for d in (0, 1, 2):
    res = search_induced_square_subdisk(g, d, size_cap=8)
    found = res.witness.to_json() if res.witness else None
    print(f"square subdisk with dim_I {d}: {found} (truncated by cap: {res.exhausted})")

print()
print(explain(classify(g, subdisk_cap=6)))
