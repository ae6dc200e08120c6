"""
PSL(2,31) acting on 32 points
=============================

Build the geometry with a dihedral subgroup of order 30 and an A5, then look
at the shape of its Levi graph.
"""

import time

from cosetforge import fingerprint, is_connected_geometry, is_core_free, levi_graph, make_coset_geometry
from cosetforge.reference import alternating, dihedral, psl2_31_geometry

start = time.perf_counter()
G, D15, A5 = psl2_31_geometry()
print("|G| =", G.order(), "on", G.degree, "points")
print("D15 matches:", fingerprint(D15) == fingerprint(dihedral(15)))
print("A5 matches:", fingerprint(A5) == fingerprint(alternating(5)))

geo = make_coset_geometry(G, D15.generators, A5.generators)
print("connected:", is_connected_geometry(geo))
print("core-free:", is_core_free(geo))
print("|G01| =", geo.borel.order())

X = levi_graph(geo)
print("Levi graph:", len(X.black), "+", len(X.white))
print("valences:", sorted({X.degree(v) for v in X.black}), sorted({X.degree(v) for v in X.white}))
print(f"done in {time.perf_counter() - start:.2f}s")
