import random

import pytest

from cosetforge.autsearch import certificate
from cosetforge.errors import NotConnected, NotCoreFree, NotEdgeTransitive, NotSubgroup
from cosetforge.geometry import (
    LeviData,
    aut_o,
    automorphism_group,
    classify_edge_transitivity,
    dual_geometry,
    dualities,
    flag_action,
    gamma_psi,
    is_connected_geometry,
    is_core_free,
    is_stable,
    levi_graph,
    levi_graph_by_intersection,
    make_coset_geometry,
    levi_stabilizer_orders,
)
from cosetforge.graphs import builtin, dual, from_edge_list, subdivide
from cosetforge.groups import PermGroup, closure, core_in, transporter
from cosetforge.perm import identity, parse_cycles
from cosetforge.reference import cyclic, psl2_31_geometry, symmetric
from cosetforge.subgroups import subgroup_classes

import fixtures
from oracles import (
    automorphisms_by_bijections,
    closure_elements,
    conjugates_of,
    count_automorphisms,
    inv,
    largest_arc_transitive_k,
    mul,
    random_group_gens,
)

S0 = "(2,3)(4,5)"
S1 = "(1,2)(3,4)"
S2 = "(2,5)(3,4)"


def hemidodecahedron():
    s0, s1, s2 = (parse_cycles(t, 5) for t in (S0, S1, S2))
    G = PermGroup(5, [s0, s1, s2])
    return make_coset_geometry(G, [s1, s2], [s0, s2])


def whole_geometry(G):
    return make_coset_geometry(G, G.generators, G.generators)


# -- construction ---------------------------------------------------------------------


def test_hemidodecahedron_orders():
    geo = hemidodecahedron()
    assert geo.orders() == (60, 6, 4, 2)
    assert closure(geo.sub0, [parse_cycles(S0, 5)]).order() == 60


def test_hemidodecahedron_levi():
    geo = hemidodecahedron()
    X = levi_graph(geo)
    assert (len(X.black), len(X.white), X.n_edges) == (10, 15, 30)
    target = subdivide(builtin("petersen"))
    assert certificate(X, "respect_classes") == certificate(target, "respect_classes")
    assert certificate(X) == certificate(target)
    assert count_automorphisms(X.adjacency, X.color) == aut_o(X).order() == 120
    assert not is_stable(geo)
    assert is_core_free(geo)


def test_hemidodecahedron_core_by_conjugates():
    geo = hemidodecahedron()
    elems = set(geo.group.elements())
    meet = frozenset.intersection(*conjugates_of(frozenset(geo.borel.elements()), elems))
    assert meet == {identity(5)}
    assert core_in(geo.borel, geo.group).is_trivial()


def test_not_subgroup():
    G = symmetric(3).pointwise_stabilizer([2])
    with pytest.raises(NotSubgroup):
        make_coset_geometry(G, [parse_cycles("(1,3)", 3)], [])


def test_c2_with_trivial_subgroups():
    G = cyclic(2)
    geo = make_coset_geometry(G, [], [])
    assert geo.borel.order() == 1
    X = levi_graph(geo)
    assert (len(X.black), len(X.white), X.n_edges) == (2, 2, 2)
    assert is_connected_geometry(geo) == (False, 2)
    assert len(X.components()) == 2


def test_whole_group_geometry():
    geo = whole_geometry(symmetric(3))
    assert is_connected_geometry(geo) == (True, 1)
    X = levi_graph(geo)
    assert (X.n_vertices, X.n_edges) == (2, 1)
    assert not is_core_free(geo)


def test_equal_normal_subgroups_not_core_free():
    C4 = cyclic(4)
    c2 = parse_cycles("(1,3)(2,4)", 4)
    geo = make_coset_geometry(C4, [c2], [c2])
    assert not is_core_free(geo)


def test_dual_geometry_is_involution():
    geo = hemidodecahedron()
    assert dual_geometry(dual_geometry(geo)) == geo
    d = dual_geometry(geo)
    assert (d.sub0.order(), d.sub1.order()) == (4, 6)
    assert certificate(levi_graph(d)) == certificate(dual(levi_graph(geo)))


def test_levi_by_flags_matches_intersection_definition():
    for geo in (hemidodecahedron(), gamma_psi(builtin("k33")), gamma_psi(builtin("cube"))):
        assert levi_graph(geo) == levi_graph_by_intersection(geo)


def test_levi_reproducible():
    a = levi_graph(hemidodecahedron())
    b = levi_graph(hemidodecahedron())
    assert a == b and a.labels == b.labels


# -- reverse direction -------------------------------------------------------------


def test_gamma_psi_examples():
    assert gamma_psi(fixtures.k2()).orders() == (1, 1, 1, 1)
    assert gamma_psi(builtin("petersen_subdivision")).orders()[:3] == (120, 12, 8)
    assert gamma_psi(builtin("k33")).orders()[:3] == (36, 12, 12)
    with pytest.raises(NotConnected):
        gamma_psi(from_edge_list([(0, 1), (2, 3)]))
    with pytest.raises(NotEdgeTransitive):
        gamma_psi(from_edge_list([(0, 1), (1, 2), (2, 3)]))


@pytest.mark.parametrize("X", fixtures.edge_transitive_fixtures(), ids=lambda g: g.id)
def test_levi_roundtrip_and_stability(X):
    geo = gamma_psi(X)
    assert core_in(geo.borel, geo.group).is_trivial()
    assert certificate(levi_graph(geo)) == certificate(X)
    assert is_stable(geo)
    G, g0, g1, g01 = geo.orders()
    Y = levi_graph(geo)
    assert (len(Y.black), len(Y.white), Y.n_edges) == (G // g0, G // g1, G // g01)
    assert levi_stabilizer_orders(geo) == (g0, g1, g01)


def test_unstable_k33_geometry():
    X = builtin("k33")
    A = aut_o(X)
    H = next(H for H in subgroup_classes(A) if H.order() == 9)
    geo = make_coset_geometry(H, H.stabilizer(0).generators, H.stabilizer(3).generators)
    assert geo.orders() == (9, 3, 3, 1)
    assert not is_stable(geo)


def test_is_stable_preconditions():
    with pytest.raises(NotConnected):
        is_stable(make_coset_geometry(cyclic(2), [], []))
    with pytest.raises(NotCoreFree):
        is_stable(whole_geometry(symmetric(3)))


def test_levi_conjugate_vertex_stabilizers():
    geo = hemidodecahedron()
    data = LeviData(geo)
    image, kernel = data.action()
    stabs = [image.stabilizer(v) for v in data.graph.black]
    assert {S.order() for S in stabs} == {6}
    assert all(transporter(image, stabs[0], S) is not None for S in stabs)


# -- core-free iff faithful ----------------------------------------------------------


def _random_geometry(rng):
    n, gens, elems = random_group_gens(rng, 600, degrees=(4, 5, 6), ngens=(2,))
    G = PermGroup(n, gens)
    pool = sorted(elems)
    gens0 = [rng.choice(pool) for _ in range(rng.choice((1, 2)))]
    gens1 = [rng.choice(pool) for _ in range(rng.choice((1, 2)))]
    return make_coset_geometry(G, gens0, gens1), elems


def test_core_free_iff_faithful_random():
    rng = random.Random(17)
    seen = {True: 0, False: 0}
    for _ in range(110):
        geo, elems = _random_geometry(rng)
        b = set(geo.borel.elements())
        kernel = [h for h in b if all(mul(mul(inv(x), h), x) in b for x in elems)]
        _, kernel_order = flag_action(geo)
        assert kernel_order == len(kernel)
        free = core_in(geo.borel, geo.group).is_trivial()
        assert free == (len(kernel) == 1)
        if is_connected_geometry(geo)[0]:
            assert is_core_free(geo) == free
        seen[free] += 1
    assert seen[True] >= 10 and seen[False] >= 10


def test_component_count_random():
    rng = random.Random(19)
    for _ in range(40):
        geo, _ = _random_geometry(rng)
        connected, count = is_connected_geometry(geo)
        X = levi_graph(geo)
        assert len(X.components()) == count
        G, g0, g1, g01 = geo.orders()
        assert (len(X.black), len(X.white), X.n_edges) == (G // g0, G // g1, G // g01)
        joined = closure_elements(list(geo.sub0.generators) + list(geo.sub1.generators), geo.group.degree)
        assert count == G // len(joined)


# -- dualities ---------------------------------------------------------------------


def test_k33_dualities_against_brute_force():
    X = builtin("k33")
    A = aut_o(X)
    full = automorphisms_by_bijections(6, X.edges)
    swapping = [p for p in full if X.color[p[0]] != X.color[0]]
    assert len(swapping) == 36
    orders = []
    for p in swapping:
        k, q = 1, p
        while q != identity(6):
            q = mul(p, q)
            k += 1
        orders.append(k)
    assert dualities(X, A) == {"min_order": min(orders), "polar": 2 in orders}
    assert min(orders) == 2


def test_dualities_edge_cases():
    assert dualities(builtin("petersen_subdivision"), aut_o(builtin("petersen_subdivision"))) is None
    k2 = fixtures.k2()
    assert dualities(k2, aut_o(k2)) == {"min_order": 2, "polar": True}
    X = builtin("k33")
    with pytest.raises(NotSubgroup):
        dualities(X, automorphism_group(X, "full"))


def test_dual_graph_certificates():
    X = builtin("k33")
    assert certificate(dual(X), "respect_classes") == certificate(X, "respect_classes")


# -- transitivity classes -------------------------------------------------------------


def test_k33_full_group_arc_transitivity_oracle():
    X = builtin("k33")
    full = automorphisms_by_bijections(6, X.edges)
    k = largest_arc_transitive_k(X.adjacency, full)
    t = classify_edge_transitivity(X, automorphism_group(X, "full"))
    assert t.kind == "arc_transitive"
    assert t.k == k == 3
    assert classify_edge_transitivity(X, aut_o(X)).kind == "semi_symmetric"


@pytest.mark.parametrize("name,expected", [("cube", 2), ("heawood", 4), ("k44", 3)])
def test_arc_transitivity_levels(name, expected):
    X = builtin(name)
    A = automorphism_group(X, "full")
    assert largest_arc_transitive_k(X.adjacency, A.elements()) == expected
    assert classify_edge_transitivity(X, A).k == expected


def test_k_cap():
    X = fixtures.cycle(8)
    t = classify_edge_transitivity(X, automorphism_group(X, "full"), k_cap=5)
    assert (t.kind, t.k, t.k_capped) == ("arc_transitive", 5, True)
    assert str(t) == "arc_transitive(k>=5)"


def test_half_arc_transitive_rotations():
    X = fixtures.cycle(8)
    rot = PermGroup(8, [tuple((i + 1) % 8 for i in range(8))])
    t = classify_edge_transitivity(X, rot)
    assert t.kind == "half_arc_transitive"
    assert len(set(X.degrees())) == 1 and X.degree(0) % 2 == 0


@pytest.mark.parametrize("X", [builtin("k33"), builtin("cube"), fixtures.cycle(8), fixtures.crown(4)], ids=lambda g: g.id)
def test_edge_transitive_subgroups_of_full_group(X):
    A = automorphism_group(X, "full")
    for H in subgroup_classes(A):
        if H.order() % X.n_edges:
            continue
        try:
            t = classify_edge_transitivity(X, H)
        except NotEdgeTransitive:
            continue
        orbits = H.orbits(range(X.n_vertices))
        assert len(orbits) <= 2
        if len(orbits) == 1:
            assert t.kind in ("arc_transitive", "half_arc_transitive")
            if t.kind == "half_arc_transitive":
                assert X.degree(0) % 2 == 0 and len(set(X.degrees())) == 1
        else:
            assert t.kind == "semi_symmetric"


def test_full_aut_index_at_most_two():
    graphs = fixtures.edge_transitive_fixtures() + [from_edge_list([(0, 1), (1, 2), (2, 3), (3, 4)])]
    for X in graphs:
        full = automorphism_group(X, "full")
        A = aut_o(X)
        idx = full.order() // A.order()
        assert idx in (1, 2)
        if idx == 2:
            assert any(X.color[g[X.black[0]]] != X.color[X.black[0]] for g in full.generators)


# -- the PSL(2, 31) example ------------------------------------------------------------


def test_psl2_31_geometry():
    G, D15, A5 = psl2_31_geometry()
    assert (G.order(), D15.order(), A5.order()) == (14880, 30, 60)
    geo = make_coset_geometry(G, D15.generators, A5.generators)
    assert geo.borel.order() == 10
    assert is_connected_geometry(geo) == (True, 1)
    X = levi_graph(geo)
    assert (len(X.black), len(X.white)) == (496, 248)
    assert {X.degree(v) for v in X.black} == {3}
    assert {X.degree(v) for v in X.white} == {6}
    assert X.is_connected()
    assert core_in(geo.borel, G).is_trivial()
