"""Rank two coset geometries and their Levi graphs, in both directions.

``levi_graph`` turns (G : G0, G1) into a bipartite graph whose black vertices
are the left cosets of G0, white vertices the left cosets of G1 and edges the
left cosets of the Borel subgroup G01 = G0 & G1 (flag cG01 joins cG0 to cG1).
``gamma_psi`` goes the other way, from an edge-transitive bipartite graph to
its largest core-free coset geometry.
"""

from dataclasses import dataclass
from typing import Optional

from .autsearch import automorphism_group_of_partition, find_isomorphism
from .errors import NotConnected, NotCoreFree, NotEdgeTransitive, NotSubgroup
from .graphs import BLACK, ColoredBipartiteGraph
from .groups import (
    DEFAULT_ELEMENT_CAP,
    PermGroup,
    closure,
    core_in,
    induced_action,
    left_coset_table,
)
from .perm import compose, format_cycles, inverse
from .perm import order as perm_order


@dataclass(frozen=True)
class CosetGeometry:
    group: PermGroup
    sub0: PermGroup
    sub1: PermGroup
    borel: PermGroup

    def orders(self):
        return self.group.order(), self.sub0.order(), self.sub1.order(), self.borel.order()

    def __eq__(self, other):
        if not isinstance(other, CosetGeometry):
            return NotImplemented
        return (self.group, self.sub0, self.sub1) == (other.group, other.sub0, other.sub1)

    def __hash__(self):
        return hash(self.orders())


@dataclass(frozen=True)
class TransitivityClass:
    kind: str  # arc_transitive | half_arc_transitive | semi_symmetric
    k: Optional[int] = None
    k_capped: bool = False

    def __str__(self):
        if self.kind != "arc_transitive":
            return self.kind
        return f"{self.kind}(k{'>=' if self.k_capped else '='}{self.k})"


def intersection(A, B, cap=DEFAULT_ELEMENT_CAP):
    """A & B, by filtering the elements of the smaller group."""
    small, big = (A, B) if A.order() <= B.order() else (B, A)
    return PermGroup.from_elements(A.degree, [g for g in small.elements(cap) if big.contains(g)])


def make_coset_geometry(G, gens0, gens1, cap=DEFAULT_ELEMENT_CAP):
    gens0 = [tuple(g) for g in gens0]
    gens1 = [tuple(g) for g in gens1]
    for g in gens0 + gens1:
        if not G.contains(g):
            raise NotSubgroup(f"{format_cycles(g)} is not in the group")
    G0 = PermGroup(G.degree, gens0)
    G1 = PermGroup(G.degree, gens1)
    return CosetGeometry(G, G0, G1, intersection(G0, G1, cap))


def geometry_from_subgroups(G, G0, G1, borel=None, cap=DEFAULT_ELEMENT_CAP):
    if not (G0.is_subgroup_of(G) and G1.is_subgroup_of(G)):
        raise NotSubgroup("maximal parabolics must lie in the group")
    return CosetGeometry(G, G0, G1, borel if borel is not None else intersection(G0, G1, cap))


def dual_geometry(geo):
    return CosetGeometry(geo.group, geo.sub1, geo.sub0, geo.borel)


class LeviData:
    """Levi graph of a coset geometry together with the coset bookkeeping."""

    def __init__(self, geo, cap=DEFAULT_ELEMENT_CAP):
        G = geo.group
        self.geometry = geo
        self.reps0, self.coset0 = left_coset_table(G, geo.sub0, cap)
        self.reps1, self.coset1 = left_coset_table(G, geo.sub1, cap)
        self.flag_reps, _ = left_coset_table(G, geo.borel, cap)
        nb = len(self.reps0)
        nw = len(self.reps1)
        pairs = [(self.coset0[c], nb + self.coset1[c]) for c in self.flag_reps]
        labels = [f"{format_cycles(r)}G0" for r in self.reps0]
        labels += [f"{format_cycles(r)}G1" for r in self.reps1]
        self.graph = ColoredBipartiteGraph.from_edges(
            nb + nw, pairs, [BLACK] * nb + [1] * nw, labels=tuple(labels)
        )
        self.n_black = nb

    def vertex_of(self, g, color=BLACK):
        """Vertex holding the coset gG0 (black) or gG1 (white)."""
        if color == BLACK:
            return self.coset0[g]
        return self.n_black + self.coset1[g]

    def action_images(self):
        """Permutations of the Levi vertices induced by G's generators."""
        out = []
        for g in self.geometry.group.generators:
            img = [self.coset0[compose(g, r)] for r in self.reps0]
            img += [self.n_black + self.coset1[compose(g, r)] for r in self.reps1]
            out.append(tuple(img))
        return out

    def kernel(self):
        """Elements of G fixing every Levi vertex; they all lie in the Borel subgroup."""
        geo = self.geometry
        fixed = [
            h
            for h in geo.borel.elements()
            if all(self.coset0[compose(h, r)] == i for i, r in enumerate(self.reps0))
            and all(self.coset1[compose(h, r)] == j for j, r in enumerate(self.reps1))
        ]
        return PermGroup.from_elements(geo.group.degree, fixed)

    def action(self):
        """(image in Aut_o(Levi), kernel) of G acting on the Levi vertices."""
        image = PermGroup(self.graph.n_vertices, self.action_images())
        kernel = self.kernel()
        if image.order() * kernel.order() != self.geometry.group.order():
            raise AssertionError("image and kernel orders do not multiply to |G|")
        return image, kernel


def levi_graph(geo, cap=DEFAULT_ELEMENT_CAP):
    return LeviData(geo, cap).graph


def levi_graph_by_intersection(geo, cap=DEFAULT_ELEMENT_CAP):
    """Levi graph from the definition: aG0 ~ bG1 iff the cosets meet (small cases)."""
    G = geo.group
    reps0, _ = left_coset_table(G, geo.sub0, cap)
    reps1, _ = left_coset_table(G, geo.sub1, cap)
    h0 = geo.sub0.elements(cap)
    h1 = geo.sub1.elements(cap)
    sets0 = [frozenset(compose(r, h) for h in h0) for r in reps0]
    sets1 = [frozenset(compose(r, h) for h in h1) for r in reps1]
    nb = len(reps0)
    pairs = [(i, nb + j) for i, a in enumerate(sets0) for j, b in enumerate(sets1) if a & b]
    return ColoredBipartiteGraph.from_edges(nb + len(reps1), pairs, [BLACK] * nb + [1] * len(reps1))


def is_connected_geometry(geo):
    """(connected, number of components) with components = |G : <G0, G1>|."""
    joined = closure(geo.sub0, geo.sub1.generators)
    count = geo.group.order() // joined.order()
    return count == 1, count


def is_core_free(geo, cap=DEFAULT_ELEMENT_CAP):
    """Borel subgroup core-free in G; cross-checked against faithfulness on flags."""
    core = core_in(geo.borel, geo.group, cap)
    free = core.is_trivial()
    if is_connected_geometry(geo)[0]:
        _, kernel_order = flag_action(geo, cap)
        if (kernel_order == 1) != free:
            raise AssertionError("core-freeness disagrees with faithfulness on flags")
    return free


def flag_action(geo, cap=DEFAULT_ELEMENT_CAP):
    """Image of G acting on the edge set of its Levi graph, and |G| / |image|."""
    data = LeviData(geo, cap)
    image = PermGroup(data.graph.n_vertices, data.action_images())
    flag_image, _ = induced_action(image, [frozenset(e) for e in data.graph.edges])
    return flag_image, geo.group.order() // flag_image.order()


def stabilizer_of_edge(G, b, w):
    return G.pointwise_stabilizer([b, w])


def aut_o(X):
    return automorphism_group_of_partition(X.adjacency, [X.black, X.white])


def gamma_psi(X):
    """Largest core-free coset geometry (Aut_o(X) : Stab(b), Stab(w))."""
    if not X.is_connected():
        raise NotConnected("graph is not connected")
    G = aut_o(X)
    edge = X.base_edge()
    if edge is None:
        triv = PermGroup.trivial(X.n_vertices)
        return CosetGeometry(G, G, G, G) if X.n_vertices <= 1 else CosetGeometry(G, triv, triv, triv)
    b, w = edge
    G0 = G.stabilizer(b)
    G1 = G.stabilizer(w)
    G01 = G0.stabilizer(w)
    if G.order() // G01.order() != X.n_edges:
        raise NotEdgeTransitive("Aut_o(X) is not transitive on edges")
    return CosetGeometry(G, G0, G1, G01)


def is_stable(geo, cap=DEFAULT_ELEMENT_CAP):
    """Whether the geometry is isomorphic to the largest core-free geometry of its Levi graph."""
    if not is_connected_geometry(geo)[0]:
        raise NotConnected("geometry is not connected")
    if not is_core_free(geo, cap):
        raise NotCoreFree("Borel subgroup has a nontrivial core")
    data = LeviData(geo, cap)
    X = data.graph
    A = aut_o(X)
    image, _ = data.action()
    if not image.is_subgroup_of(A):
        raise AssertionError("coset action does not preserve the Levi graph")
    if image.order() != A.order():
        return False
    b = data.vertex_of(geo.group.identity(), BLACK)
    w = data.vertex_of(geo.group.identity(), 1)
    return (
        A.stabilizer(b).order() == geo.sub0.order()
        and A.stabilizer(w).order() == geo.sub1.order()
    )


def dualities(X, H, normalizing=True, cap=DEFAULT_ELEMENT_CAP, aut=None):
    """Color-swapping automorphisms of X (normalizing H unless told otherwise).

    Returns None when there is none, else ``{"min_order": k, "polar": bool}``.
    """
    A = aut if aut is not None else aut_o(X)
    if not H.is_subgroup_of(A):
        raise NotSubgroup("H is not a subgroup of Aut_o(X)")
    black, white = list(X.black), list(X.white)
    if len(black) != len(white):
        return None
    d = find_isomorphism(X.adjacency, [black, white], [white, black])
    if d is None:
        return None
    orders = []
    for a in A.elements(cap):
        g = compose(d, a)
        if normalizing and not all(H.contains(compose(compose(g, h), inverse(g))) for h in H.generators):
            continue
        orders.append(perm_order(g))
    if not orders:
        return None
    return {"min_order": min(orders), "polar": 2 in orders}


def full_automorphism_group(X):
    n = X.n_vertices
    return automorphism_group_of_partition(X.adjacency, [list(range(n))])


AUT_MODES = ("full", "color_respecting", "color_preserving")


def automorphism_group(X, mode="full"):
    """Aut(X), Aut_O(X) (classes kept or swapped) or Aut_o(X) (classes fixed)."""
    if mode == "full":
        return full_automorphism_group(X)
    if mode == "color_preserving":
        return aut_o(X)
    if mode != "color_respecting":
        raise ValueError(f"unknown automorphism mode {mode!r}")
    A = aut_o(X)
    black, white = list(X.black), list(X.white)
    if len(black) != len(white):
        return A
    d = find_isomorphism(X.adjacency, [black, white], [white, black])
    if d is None:
        return A
    return PermGroup(X.n_vertices, list(A.generators) + [d], known_order=2 * A.order())


def _karc(X, k):
    """A deterministic k-arc: start at the base edge, always take the least new neighbor."""
    u, v = min(X.edges)
    arc = [u, v]
    while len(arc) < k + 1:
        prev, cur = arc[-2], arc[-1]
        nxt = min(x for x in X.neighbors(cur) if x != prev)
        arc.append(nxt)
    return arc


def classify_edge_transitivity(X, H, k_cap=8):
    edge_orbit = _edge_orbit_size(X, H)
    if edge_orbit != X.n_edges:
        raise NotEdgeTransitive("H is not transitive on edges")
    vorbits = H.orbits(range(X.n_vertices))
    vorbits = [o for o in vorbits if any(X.degree(v) for v in o)]
    if len(vorbits) >= 2:
        return TransitivityClass("semi_symmetric")
    u, v = min(X.edges)
    if H.pointwise_stabilizer([u, v]).order() * 2 * X.n_edges != H.order():
        deg = X.degree(u)
        if deg % 2 or len(set(X.degrees())) != 1:
            raise AssertionError("half-arc-transitive action on a non-regular or odd-valent graph")
        return TransitivityClass("half_arc_transitive")
    d = X.degree(u)
    if d < 2:
        return TransitivityClass("arc_transitive", 1, False)
    k = 1
    stab = H.pointwise_stabilizer([u, v])
    while k < k_cap:
        arc = _karc(X, k + 1)
        stab = stab.stabilizer(arc[-1])
        count = 2 * X.n_edges * (d - 1) ** k
        if H.order() // stab.order() != count:
            return TransitivityClass("arc_transitive", k, False)
        k += 1
    return TransitivityClass("arc_transitive", k, True)


def _edge_orbit_size(X, H):
    edges = {frozenset(e) for e in X.edges}
    start = frozenset(min(X.edges))
    seen = {start}
    queue = [start]
    for e in queue:
        for g in H.generators:
            f = frozenset(g[x] for x in e)
            if f not in seen:
                seen.add(f)
                queue.append(f)
    if not seen <= edges:
        raise NotSubgroup("H does not act on the edges of X")
    return len(seen)


def levi_stabilizer_orders(geo, cap=DEFAULT_ELEMENT_CAP):
    """Stabilizer orders in the Levi action: |G0|, |G1|, |G01| for vertex, line, flag."""
    data = LeviData(geo, cap)
    image, kernel = data.action()
    b = data.vertex_of(geo.group.identity(), BLACK)
    w = data.vertex_of(geo.group.identity(), 1)
    k = kernel.order()
    return (
        image.stabilizer(b).order() * k,
        image.stabilizer(w).order() * k,
        image.pointwise_stabilizer([b, w]).order() * k,
    )
