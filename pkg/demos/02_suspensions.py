"""
Suspensions of paths
====================

The suspension of a path of length n >= 3 is a square disk whose interior
is the middle n - 2 edges of the path. All of them have cubic Dehn function.
"""

from bbdehn import classify, path, recognize_disk, suspension, build_flag_complex
from bbdehn.structure import recognize_suspension_of_path

print("n  interior_edges  dim_I  verdict")
for n in range(1, 11):
    g = suspension(path(n))
    d = recognize_disk(build_flag_complex(g))
    v = classify(g)
    print(f"{n:<3}{len(d.interior_edges):<16}{d.dim_I:<7}n^{v.exponent}")

# going back: read the apexes and the path off the graph
cert = recognize_suspension_of_path(suspension(path(5)))
print(cert.to_json())
