"""Edge-transitive bipartite graphs and rank two coset geometries."""

from .analysis import (
    AnalysisRow,
    RunConfig,
    analyze_graph,
    answer_ten_questions,
    edge_transitive_subgroups,
)
from .autsearch import COLOR_MODES, GraphCertificate, certificate
from .errors import (
    CapExceeded,
    CosetForgeError,
    DegreeMismatch,
    DuplicateEdge,
    LoopEdge,
    MalformedRecord,
    NotBipartite,
    NotConnected,
    NotCoreFree,
    NotEdgeTransitive,
    NotInvariant,
    NotProper,
    NotSubgroup,
    UnknownName,
)
from .fingerprint import GroupFingerprint, fingerprint
from .geometry import (
    AUT_MODES,
    CosetGeometry,
    LeviData,
    TransitivityClass,
    aut_o,
    automorphism_group,
    classify_edge_transitivity,
    dual_geometry,
    dualities,
    flag_action,
    gamma_psi,
    geometry_from_subgroups,
    is_connected_geometry,
    is_core_free,
    is_stable,
    levi_graph,
    make_coset_geometry,
)
from .graphs import (
    BLACK,
    BUILTINS,
    WHITE,
    ColoredBipartiteGraph,
    Graph,
    bipartition,
    builtin,
    dual,
    from_edge_list,
    girth,
    is_configuration,
    is_connected,
    parse_graph6,
    subdivide,
    write_graph6,
)
from .groups import (
    PermGroup,
    closure,
    contains,
    core_in,
    group_from_generators,
    induced_action,
    is_maximal_in,
    is_normal_in,
    max_element_order,
    normalizer_in,
    orbit,
    orbits,
    order,
    point_stabilizer,
    transitivity_degree,
    transporter,
)
from .subgroups import subgroup_classes

__version__ = "0.1.0"
