import functools

import pytest

from cosetforge.analysis import RunConfig, analyze_graph, answer_ten_questions, edge_transitive_subgroups
from cosetforge.errors import CapExceeded, NotConnected, NotEdgeTransitive
from cosetforge.fingerprint import fingerprint
from cosetforge.geometry import aut_o, dual_geometry, levi_graph
from cosetforge.graphs import builtin, from_edge_list
from cosetforge.groups import is_maximal_in, max_element_order, transitivity_degree
from cosetforge.reference import named_group

import fixtures
from oracles import closure_elements


@functools.lru_cache(maxsize=None)
def rows_for(name):
    return analyze_graph(builtin(name))


def _find(rows, **want):
    return [r for r in rows if all(getattr(r, k) == v for k, v in want.items())]


def test_k33_rows():
    rows = rows_for("k33")
    a = _find(rows, max_string="2TMM2T", h_order=18, h01_order=2)
    b = _find(rows, max_string="M2T2TM", h_order=18, h01_order=2)
    assert len(a) == len(b) == 1
    assert _find(rows, norm_string="YYYY", h_order=9)
    assert _find(rows, norm_string="YYNN", h_order=18)
    assert _find(rows, norm_string="YNYN", h_order=18)
    s3c3 = fingerprint(named_group("S3xC3"))
    assert a[0].h_fingerprint == b[0].h_fingerprint == s3c3


def test_k33_dual_pair_swaps_max_string():
    rows = rows_for("k33")
    a = _find(rows, max_string="2TMM2T")[0]
    X = builtin("k33")
    # the dual geometry is analysed on the color-swapped graph
    swapped = analyze_graph(X.swap_colors())
    assert _find(swapped, max_string="M2T2TM", norm_string=a.norm_string[0] + a.norm_string[2] + a.norm_string[1] + a.norm_string[3])
    d = dual_geometry(a.geometry)
    assert (d.sub0.order(), d.sub1.order()) == (a.h1_order, a.h0_order)


def test_k33_row_count():
    # subgroups of S3 x S3 with order divisible by 9: C3^2, three of index 2, the whole group
    assert [r.h_order for r in rows_for("k33")] == [36, 18, 18, 18, 9]


def test_cube_row():
    rows = _find(rows_for("cube"), max_string="MM2T2T")
    assert len(rows) == 1
    r = rows[0]
    assert (r.h_order, r.h0_order, r.h1_order) == (12, 3, 3)
    assert r.h_fingerprint == fingerprint(named_group("A4"))


def test_heawood_row():
    rows = _find(rows_for("heawood"), norm_string="NNNY")
    assert len(rows) == 1
    r = rows[0]
    assert (r.h_order, r.h0_order, r.h1_order, r.h01_order) == (21, 3, 3, 1)
    assert r.h_fingerprint == fingerprint(named_group("C7:C3"))
    assert r.maxord == 7


def test_k44_row():
    rows = _find(rows_for("k44"), norm_string="YYYY", h_order=16)
    assert rows
    assert all((r.h0_order, r.h1_order) == (4, 4) for r in rows)
    assert rows[0].h_fingerprint == fingerprint(named_group("C2^2xC2^2"))


def test_petersen_subdivision_rows():
    rows = rows_for("petersen_subdivision")
    assert [r.h_order for r in rows] == [120, 60]
    assert rows[1].h_fingerprint == fingerprint(named_group("A5"))
    assert rows[0].h_fingerprint == fingerprint(named_group("S5"))
    assert all(r.dual is None for r in rows)


def test_every_row_is_edge_transitive_and_consistent():
    for name in ("k33", "cube", "heawood", "petersen_subdivision"):
        X = builtin(name)
        for r in rows_for(name):
            assert r.h_order == X.n_edges * r.h01_order
            assert r.h_order == r.h0_order * len(X.black) == r.h1_order * len(X.white)
            assert r.connected and r.core_free
            assert r.transitivity.kind == "semi_symmetric"
            assert r.maxord == max_element_order(r.geometry.group)
            assert len(r.max_symbols()) == 4 and "".join(r.max_symbols()) == r.max_string


def test_two_transitive_implies_maximal_on_rows():
    for name in ("k33", "cube", "heawood", "petersen_subdivision"):
        X = builtin(name)
        for r in rows_for(name):
            H, H0, H1, H01 = r.geometry.group, r.geometry.sub0, r.geometry.sub1, r.geometry.borel
            b, w = X.base_edge()
            checks = [(H0, X.neighbors(b), H01), (H1, X.neighbors(w), H01), (H, X.black, H0), (H, X.white, H1)]
            for sym, (acting, pts, sub) in zip(r.max_symbols(), checks):
                if transitivity_degree(acting, pts) == 2 and sub.order() < acting.order():
                    assert is_maximal_in(sub, acting)
                if sym == "2T":
                    assert transitivity_degree(acting, pts) == 2


@pytest.mark.parametrize("X", fixtures.cubic_fixtures(), ids=lambda g: g.id)
def test_cubic_rows_have_no_x_in_first_two(X):
    for r in analyze_graph(X):
        assert "X" not in r.max_symbols()[:2]


@pytest.mark.parametrize("X", fixtures.quartic_fixtures(), ids=lambda g: g.id)
def test_quartic_rows_have_no_m_in_first_two(X):
    rows = analyze_graph(X)
    assert rows
    for r in rows:
        assert "M" not in r.max_symbols()[:2]


def test_subgroup_list_matches_geometry_orders():
    X = builtin("cube")
    A = aut_o(X)
    subs = edge_transitive_subgroups(X, aut=A)
    assert sorted(H.order() for H in subs) == [12, 24]
    for H in subs:
        row = answer_ten_questions(X, H, aut=A)
        assert len(closure_elements(H.generators, X.n_vertices)) == row.h_order
        assert levi_graph(row.geometry).n_edges == X.n_edges


def test_k2_row():
    rows = analyze_graph(fixtures.k2())
    assert len(rows) == 1
    r = rows[0]
    assert (r.h_order, r.max_string, r.norm_string, r.dual, r.maxord) == (1, "XXXX", "YYYY", 2, 1)


def test_errors():
    with pytest.raises(NotConnected):
        analyze_graph(from_edge_list([(0, 1), (2, 3)]))
    with pytest.raises(NotEdgeTransitive):
        analyze_graph(from_edge_list([(0, 1), (1, 2), (2, 3)]))
    with pytest.raises(CapExceeded):
        analyze_graph(builtin("k44"), RunConfig(subgroup_order_cap=100))
    with pytest.raises(ValueError):
        RunConfig(k_arc_cap=0)
    with pytest.raises(ValueError):
        RunConfig(output_format="yaml")


def test_seed_edge_override_gives_same_orders():
    X = builtin("heawood")
    base = [(r.h_order, r.h0_order, r.h1_order, r.max_string, r.norm_string) for r in rows_for("heawood")]
    for edge in [(0, 11), (3, 9), (6, 13)]:
        assert X.has_edge(*edge)
        rows = analyze_graph(X, RunConfig(seed_edge_override=edge))
        assert [(r.h_order, r.h0_order, r.h1_order, r.max_string, r.norm_string) for r in rows] == base


def test_any_duality_flag():
    X = builtin("k33")
    rows = analyze_graph(X, RunConfig(dual_normalizing=False))
    assert all(r.dual == 2 for r in rows)
    assert [r.dual for r in rows_for("k33")] == [2, None, None, 2, 2]
