"""Test graphs shared by several modules."""

import networkx as nx

from cosetforge.graphs import builtin, from_edge_list


def _from_nx(G, name):
    G = nx.convert_node_labels_to_integers(G, ordering="sorted")
    return from_edge_list(list(G.edges()), id=name)


def k2():
    return from_edge_list([(0, 1)], id="k2")


def cycle(n):
    return from_edge_list([(i, (i + 1) % n) for i in range(n)], id=f"c{n}")


def star(k):
    return from_edge_list([(0, i) for i in range(1, k + 1)], id=f"k1_{k}")


def crown(n):
    """K_{n,n} minus a perfect matching."""
    return from_edge_list([(i, n + j) for i in range(n) for j in range(n) if i != j], id=f"crown{n}")


def pappus():
    return _from_nx(nx.pappus_graph(), "pappus")


def moebius_kantor():
    return _from_nx(nx.moebius_kantor_graph(), "moebius_kantor")


def hypercube4():
    return _from_nx(nx.hypercube_graph(4), "q4")


BUILTIN_BIPARTITE = ("k33", "k44", "cube", "heawood", "petersen_subdivision")


def edge_transitive_fixtures():
    out = [builtin(name) for name in BUILTIN_BIPARTITE]
    out += [k2(), cycle(8), star(3), crown(5), pappus(), moebius_kantor(), hypercube4()]
    return out


def cubic_fixtures():
    return [builtin("k33"), builtin("cube"), builtin("heawood"), pappus(), moebius_kantor()]


def quartic_fixtures():
    return [builtin("k44"), crown(5), hypercube4()]
