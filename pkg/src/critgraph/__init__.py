"""Exact tools for diameter-2 edge-critical graphs and 3-γt-edge-critical complements."""

from .criticality import (
    ArrowWitness,
    CaseKind,
    CriticalClass,
    CriticalKind,
    MissingEdgeCase,
    TrichotomyError,
    arrow,
    arrow_witnesses,
    classify_complement,
    is_diameter_d_edge_critical,
    is_k_gt_edge_critical,
    is_k_supercritical,
    is_two_nontrivial_cliques,
    missing_edge_case,
    quasi_edges,
    supercritical_characterization,
)
from .domination import (
    DominationKind,
    DominationNumber,
    adjacent_dominating_pair,
    dominates,
    domination_number,
    duality_check,
    minimum_dominating_set,
    tdscap_holds,
)
from .enumeration import GraphStream, canonical_form, deduplicate, generate_all, read_graph6_stream
from .errors import CapabilityError, PreconditionError
from .graph import (
    Graph,
    GraphError,
    PairKind,
    VertexPair,
    VertexSet,
    closed_neighborhood,
    complement,
    components,
    is_connected,
    open_neighborhood,
)
from .graph6 import Graph6Error, graph6_decode, graph6_encode
from .harness import CampaignConfig, CampaignSummary, GraphVerdict, explain, run_campaign, verify_conjecture
from .metrics import INFINITE, Distance, diameter, distance, eccentricity
from .partition import (
    HypothesisFailure,
    InjectivityViolation,
    Partition,
    PropertyReport,
    QuasiEdgeMap,
    build_association,
    equality_properties,
    lemma_bound_check,
    missing_edge_bipartition,
    parity_bipartition,
    within_part_missing_edges,
)
from .structure import (
    ClaimReport,
    ClaimViolation,
    CutInfo,
    StrongWeak,
    asseration_check,
    conn3_claims,
    independent_cuts,
    minimum_vertex_cuts,
    strong_weak,
    vertex_connectivity,
)

__version__ = "0.1.0"
