"""
The edge-transitive subgroups of K3,3
=====================================

Walk through every conjugacy class of color-preserving subgroups that act
transitively on the edges of K3,3 and print one table row per class.
"""

from cosetforge import analyze_graph, aut_o, builtin
from cosetforge.formats import rows_to_markdown

X = builtin("k33")
print(X.id, "has", X.n_vertices, "vertices and", X.n_edges, "edges")

# the color-preserving automorphism group is S3 x S3
A = aut_o(X)
print("|Aut_o| =", A.order())

rows = analyze_graph(X)
print(rows_to_markdown(rows))

# each row is backed by a coset geometry (H; H0, H1)
for r in rows:
    geo = r.geometry
    print(r.h_order, r.max_string, r.norm_string, "dual:", r.dual, r.transitivity.kind)
