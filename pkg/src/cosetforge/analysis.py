"""Coset geometries of an edge-transitive bipartite graph, one table row each.

For every edge-transitive subgroup H of Aut_o(X) (up to conjugacy) the row
records the stabilizers H0, H1, H01 of a base edge (b, w) and answers:

* Max: for H01 <= H0, H01 <= H1, H0 <= H, H1 <= H, "2T" when the matching
  action (H0 on the neighbours of b, H1 on those of w, H on black, H on
  white vertices) is doubly transitive, else "M" when the subgroup is
  maximal, else "X".
* Norm: whether H, H0, H1, H01 are normal in Aut_o(X) (Y/N).
* Dual: least order of a color-swapping automorphism normalizing H.
* MaxOrd: largest element order in H.
"""

from dataclasses import dataclass, field
from typing import Optional

from .errors import NotConnected, NotEdgeTransitive
from .fingerprint import GroupFingerprint, fingerprint
from .geometry import (
    CosetGeometry,
    TransitivityClass,
    aut_o,
    classify_edge_transitivity,
    dualities,
)
from .groups import (
    DEFAULT_ELEMENT_CAP,
    closure,
    core_in,
    is_maximal_in,
    is_normal_in,
    max_element_order,
    transitivity_degree,
)
from .subgroups import DEFAULT_ORDER_CAP, subgroup_classes


@dataclass(frozen=True)
class RunConfig:
    subgroup_order_cap: int = DEFAULT_ORDER_CAP
    element_cap: int = DEFAULT_ELEMENT_CAP
    k_arc_cap: int = 8
    output_format: str = "csv"
    seed_edge_override: Optional[tuple] = None
    dual_normalizing: bool = True

    def __post_init__(self):
        if min(self.subgroup_order_cap, self.element_cap, self.k_arc_cap) <= 0:
            raise ValueError("caps must be positive")
        if self.output_format not in ("csv", "json", "markdown", "dot", "graph6"):
            raise ValueError(f"unknown output format {self.output_format!r}")


@dataclass(frozen=True)
class AnalysisRow:
    graph_id: str
    h_order: int
    h0_order: int
    h1_order: int
    h01_order: int
    max_string: str
    norm_string: str
    dual: Optional[int]
    maxord: int
    core_free: bool
    connected: bool
    transitivity: TransitivityClass
    h_fingerprint: Optional[GroupFingerprint] = field(default=None, compare=False)
    geometry: Optional[CosetGeometry] = field(default=None, compare=False, repr=False)

    def max_symbols(self):
        out = []
        s = self.max_string
        while s:
            step = 2 if s.startswith("2T") else 1
            out.append(s[:step])
            s = s[step:]
        return out

    def sort_key(self):
        fp = self.h_fingerprint.sort_key() if self.h_fingerprint else ()
        return (-self.h_order, fp, self.max_string, self.norm_string, self.h0_order, self.h1_order)


def _max_symbol(acting, points, sub, whole, cap):
    if transitivity_degree(acting, points) == 2:
        return "2T"
    if sub.order() < whole.order() and is_maximal_in(sub, whole, cap):
        return "M"
    return "X"


def _yn(flag):
    return "Y" if flag else "N"


def edge_transitive_subgroups(X, config=RunConfig(), aut=None):
    """Conjugacy-class representatives of edge-transitive subgroups of Aut_o(X)."""
    if not X.is_connected():
        raise NotConnected("graph is not connected")
    A = aut if aut is not None else aut_o(X)
    n_edges = X.n_edges
    b, w = _base_edge(X, config)
    if A.order() // A.pointwise_stabilizer([b, w]).order() != n_edges:
        raise NotEdgeTransitive("Aut_o(X) is not transitive on edges")
    out = []
    for H in subgroup_classes(A, config.subgroup_order_cap):
        if H.order() % n_edges:
            continue
        if H.order() // H.pointwise_stabilizer([b, w]).order() == n_edges:
            out.append(H)
    return out


def _base_edge(X, config):
    if config.seed_edge_override is not None:
        b, w = config.seed_edge_override
        if not X.has_edge(b, w) or X.color[b] != 0:
            raise ValueError(f"seed edge {(b, w)} is not a (black, white) edge")
        return b, w
    return X.base_edge()


def answer_ten_questions(X, H, config=RunConfig(), aut=None, edge=None):
    A = aut if aut is not None else aut_o(X)
    cap = config.element_cap
    b, w = edge if edge is not None else _base_edge(X, config)
    H0 = H.stabilizer(b)
    H1 = H.stabilizer(w)
    H01 = H0.stabilizer(w)
    if H.order() // H01.order() != X.n_edges:
        raise NotEdgeTransitive("H is not transitive on edges")
    max_string = "".join(
        [
            _max_symbol(H0, X.neighbors(b), H01, H0, cap),
            _max_symbol(H1, X.neighbors(w), H01, H1, cap),
            _max_symbol(H, X.black, H0, H, cap),
            _max_symbol(H, X.white, H1, H, cap),
        ]
    )
    norm_string = "".join(_yn(is_normal_in(K, A)) for K in (H, H0, H1, H01))
    duals = dualities(X, H, normalizing=config.dual_normalizing, cap=cap, aut=A)
    connected = closure(H0, H1.generators).order() == H.order()
    core_free = core_in(H01, H, cap).is_trivial()
    return AnalysisRow(
        graph_id=X.id or "",
        h_order=H.order(),
        h0_order=H0.order(),
        h1_order=H1.order(),
        h01_order=H01.order(),
        max_string=max_string,
        norm_string=norm_string,
        dual=None if duals is None else duals["min_order"],
        maxord=max_element_order(H, cap),
        core_free=core_free,
        connected=connected,
        transitivity=classify_edge_transitivity(X, H, config.k_arc_cap),
        h_fingerprint=fingerprint(H, cap),
        geometry=CosetGeometry(H, H0, H1, H01),
    )


def analyze_graph(X, config=RunConfig()):
    """All rows for X, sorted by (|H| descending, fingerprint, Max string)."""
    if X.n_edges == 0:
        raise NotEdgeTransitive("graph has no edges")
    A = aut_o(X)
    rows = [
        answer_ten_questions(X, H, config, aut=A)
        for H in edge_transitive_subgroups(X, config, aut=A)
    ]
    return sorted(rows, key=AnalysisRow.sort_key)
