"""Exact harmonic centrality for named graph families.

The BFS oracle (:mod:`.harmonic`) and the closed forms (:mod:`.closed_forms`)
are independent routes to the same exact rationals; :mod:`.verify` checks
that they agree.
"""

from .closed_forms import FormulaQuery, FormulaResult, closed_form_value, evaluate, vertex_role
from .errors import (
    DisconnectedInput,
    EmptyGraph,
    GraphError,
    InvalidFamilyParameter,
    InvalidVertex,
    ParseError,
    SelfLoop,
    TrivialGraph,
)
from .families import (
    Book,
    CompleteBipartite,
    Crown,
    Cycle,
    Family,
    FamilySpec,
    Fan,
    Helm,
    LabeledGraph,
    Ladder,
    Path,
    Prism,
    RoleKind,
    Star,
    VertexRole,
    Wheel,
    edge_count,
    generate,
    parse_family_spec,
)
from .graph import (
    DistanceVector,
    Graph,
    Rational,
    bfs_distances,
    complete_graph,
    degree,
    from_edge_list,
    is_connected,
    neighbors,
)
from .harmonic import (
    CentralityReport,
    CentralityValue,
    centrality_report,
    harmonic_number,
    normalized_harmonic,
    raw_harmonic,
)

__version__ = "0.1.0"
