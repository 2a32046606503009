"""Seven-way vertex-type classification of graphs, extremal constructions,
and exhaustive machine verification of the extremal values."""

from .canonical import (
    DEFAULT_CANON_GUARD,
    CanonicalForm,
    are_isomorphic,
    canonical_form,
)
from .classify import (
    TYPE_ORDER,
    VertexType,
    classify_all,
    classify_vertex,
    count_type,
    is_pantypical,
    type_tuple,
)
from .construct import (
    attach_path,
    figure1_pair,
    load_fixtures,
    pantypical_graph,
    t_extremal,
    vt_extremal,
)
from .generate import (
    DEFAULT_ENUM_GUARD,
    EnumConstraint,
    count_graphs,
    enumerate_graphs,
    iter_levels,
)
from .graph import (
    Graph,
    build_graph,
    complete,
    cubic,
    cycle,
    degree_sequence,
    emit_edge_list,
    get_order_cap,
    join,
    matching,
    multipartite,
    order_cap,
    parse_edge_list,
    path,
    primitive,
    set_order_cap,
)
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .verify import (
    VerifyReport,
    expected_f,
    expected_g,
    find_separating_pair,
    max_type_count,
    min_pantypical_size,
    run_survey,
    search_pantypical_witness,
    search_type_witness,
    verify_theorem1,
    verify_theorem3,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm",
    "DEFAULT_CANON_GUARD",
    "DEFAULT_ENUM_GUARD",
    "EnumConstraint",
    "Graph",
    "Graph6Error",
    "TYPE_ORDER",
    "VerifyReport",
    "VertexType",
    "are_isomorphic",
    "attach_path",
    "build_graph",
    "canonical_form",
    "classify_all",
    "classify_vertex",
    "complete",
    "count_graphs",
    "count_type",
    "cubic",
    "cycle",
    "degree_sequence",
    "emit_edge_list",
    "emit_graph6",
    "enumerate_graphs",
    "expected_f",
    "expected_g",
    "figure1_pair",
    "find_separating_pair",
    "get_order_cap",
    "is_pantypical",
    "iter_levels",
    "join",
    "load_fixtures",
    "matching",
    "max_type_count",
    "min_pantypical_size",
    "multipartite",
    "order_cap",
    "pantypical_graph",
    "parse_edge_list",
    "parse_graph6",
    "path",
    "primitive",
    "run_survey",
    "search_pantypical_witness",
    "search_type_witness",
    "set_order_cap",
    "t_extremal",
    "type_tuple",
    "verify_theorem1",
    "verify_theorem3",
    "vt_extremal",
]
