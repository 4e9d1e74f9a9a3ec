"""splitdom: exact split/nonsplit domination, independence, and
irredundance parameters of small graphs, with corpus-scale claim
verification and counterexample certificates."""

from .errors import SplitdomError
from .graph import (
    ComplementStatus,
    Graph,
    GraphStats,
    closed_neighborhood,
    from_edge_list,
    induced_status,
    parse_graph6,
    read_edge_list,
    stats,
    to_graph6,
)
from .properties import (
    Base,
    ExtremalMode,
    Flavor,
    PropertyId,
    is_dominating,
    is_extremal,
    is_independent,
    is_irredundant,
    private_neighbors,
    satisfies,
)
from .solvers import (
    ParameterId,
    ParamResult,
    ParameterTable,
    compute_parameter,
    compute_table,
    enumerate_sets,
    oracle_parameter,
)
from .families import (
    FamilyKind,
    FamilySpec,
    enumerate_two_trees,
    expected_values,
    generate,
)
from .lab import (
    Certificate,
    ClaimId,
    ScanReport,
    check_graph,
    heredity_probe,
    observe_relations,
    scan_corpus,
    twin_pentagon_graph,
    verify_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "Base",
    "Certificate",
    "ClaimId",
    "ComplementStatus",
    "ExtremalMode",
    "FamilyKind",
    "FamilySpec",
    "Flavor",
    "Graph",
    "GraphStats",
    "ParamResult",
    "ParameterId",
    "ParameterTable",
    "PropertyId",
    "ScanReport",
    "SplitdomError",
    "check_graph",
    "closed_neighborhood",
    "compute_parameter",
    "compute_table",
    "enumerate_sets",
    "enumerate_two_trees",
    "expected_values",
    "from_edge_list",
    "generate",
    "heredity_probe",
    "induced_status",
    "is_dominating",
    "is_extremal",
    "is_independent",
    "is_irredundant",
    "observe_relations",
    "oracle_parameter",
    "parse_graph6",
    "private_neighbors",
    "read_edge_list",
    "satisfies",
    "scan_corpus",
    "stats",
    "to_graph6",
    "twin_pentagon_graph",
    "verify_certificate",
]
