"""
A geometry from A5 and its Levi graph
=====================================

Three involutions of S5 generate A5.  Two of the dihedral subgroups they span
give a rank two coset geometry whose incidence graph is the subdivided
Petersen graph.
"""

from cosetforge import PermGroup, aut_o, builtin, certificate, is_stable, levi_graph, make_coset_geometry, subdivide
from cosetforge.perm import parse_cycles

s0, s1, s2 = (parse_cycles(t, 5) for t in ("(2,3)(4,5)", "(1,2)(3,4)", "(2,5)(3,4)"))
G = PermGroup(5, [s0, s1, s2])
geo = make_coset_geometry(G, [s1, s2], [s0, s2])
print("orders |G|, |G0|, |G1|, |G01|:", geo.orders())

X = levi_graph(geo)
print("Levi graph:", len(X.black), "+", len(X.white), "vertices,", X.n_edges, "edges")

same = certificate(X, "respect_classes") == certificate(subdivide(builtin("petersen")), "respect_classes")
print("isomorphic to the subdivided Petersen graph:", same)

# the graph has more symmetry than the group we started with
print("|Aut_o(Levi)| =", aut_o(X).order(), "vs |G| =", G.order())
print("stable:", is_stable(geo))
