"""Competition hypergraphs of doubly partial orders."""

__version__ = "0.1.0"

from .competition import (
    CompetitionResult,
    DoublyPartialOrder,
    build_dpo,
    competition_graph,
    competition_hypergraph,
    in_neighborhood,
    verify_structure_lemmas,
)
from .errors import (
    BadParameter,
    DPOError,
    DuplicateId,
    DuplicatePoint,
    DuplicateVertex,
    EqualPoints,
    NotContiguous,
    SingletonEdge,
    TooLarge,
    UnknownVertex,
)
from .geometry import PairClass, Point2, classify_pair, down_right, parse_rational, strictly_dominated
from .hypergraph import (
    Graph,
    Hypergraph,
    is_chordal,
    isolated_vertices,
    isomorphism,
    make_graph,
    make_hypergraph,
    trace_subhypergraph,
    two_section,
)
from .interval import IntervalCertificate, is_interval, is_interval_bruteforce, is_interval_graph
from .patterns import (
    PatternKind,
    PatternWitness,
    RealizationReport,
    check_realization,
    counterexample_hypergraph,
    embed_interval_hypergraph,
    find_forbidden_witness,
    gadget_dpo,
    generate_pattern,
    generate_staircase,
    search_realization,
)
