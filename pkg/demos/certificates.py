"""
Canonical certificates
======================

A certificate is a byte string that is equal for two graphs exactly when they
are isomorphic.  There are three flavours depending on how the two color
classes are treated.
"""

import random

from cosetforge import builtin, certificate, from_edge_list
from cosetforge.autsearch import COLOR_MODES

g = builtin("heawood")
rng = random.Random(7)
perm = list(range(g.n_vertices))
rng.shuffle(perm)
h = g.relabel(tuple(perm))

for mode in COLOR_MODES:
    print(mode, certificate(g, mode) == certificate(h, mode))

# swapping the colors only matters when the classes are kept apart
swapped = builtin("k33").swap_colors()
print("k33 swapped, preserve:", certificate(swapped) == certificate(builtin("k33")))

# a star K1,3 is not isomorphic to its color swap unless colors may be exchanged
s = from_edge_list([(0, 1), (0, 2), (0, 3)])
for mode in COLOR_MODES:
    print("K1,3", mode, certificate(s, mode) == certificate(s.swap_colors(), mode))
