"""Connectivity functions of graphs and matroids: oracles, graphic recognition and spikes."""

from .adversary import AdversaryTranscript, adversary_matroidal, adversary_nonmatroidal, v_partition
from .core import (
    CapacityError,
    ConnFuncError,
    CountedOracle,
    DomainError,
    GroundSet,
    IncompleteTableError,
    InvalidSubsetError,
    SetFunctionTable,
    ValidationReport,
    Violation,
    complement,
    oracle_eval,
    validate_connectivity,
)
from .graphs import Edge, Multigraph, boundary, gamma, vertex_support
from .hypercube import BufferedPath, buffered_path, f, induced_components, is_buffered
from .matroids import (
    CircuitFamily,
    RankTable,
    dual_rank,
    free_matroid,
    mu,
    rank_from_circuits,
    uniform_matroid,
    validate_rank_axioms,
)
from .reconstruct import AdjacencyStructure, adjacency_structure, adjacent, candidates, split_components
from .spikes import (
    IndependentSet,
    MatroidalVerdict,
    SpikyTable,
    brute_force_matroidal,
    decide_matroidal,
    is_spiky,
    lambda_W,
    lambda_n,
    spike_circuits,
    spike_mu,
    spike_rank,
)
from .verifier import GraphicVerdict, agrees_on_e_controlled, e_controlled_sets, query_budget, recognize_graphic

__version__ = "0.1.0"

__all__ = [
    "adjacency_structure",
    "AdjacencyStructure",
    "adjacent",
    "adversary_matroidal",
    "adversary_nonmatroidal",
    "AdversaryTranscript",
    "agrees_on_e_controlled",
    "boundary",
    "brute_force_matroidal",
    "buffered_path",
    "BufferedPath",
    "candidates",
    "CapacityError",
    "CircuitFamily",
    "complement",
    "ConnFuncError",
    "CountedOracle",
    "decide_matroidal",
    "DomainError",
    "dual_rank",
    "e_controlled_sets",
    "Edge",
    "f",
    "free_matroid",
    "gamma",
    "GraphicVerdict",
    "GroundSet",
    "IncompleteTableError",
    "IndependentSet",
    "induced_components",
    "InvalidSubsetError",
    "is_buffered",
    "is_spiky",
    "lambda_n",
    "lambda_W",
    "MatroidalVerdict",
    "mu",
    "Multigraph",
    "oracle_eval",
    "query_budget",
    "rank_from_circuits",
    "RankTable",
    "recognize_graphic",
    "SetFunctionTable",
    "spike_circuits",
    "spike_mu",
    "spike_rank",
    "SpikyTable",
    "split_components",
    "uniform_matroid",
    "v_partition",
    "validate_connectivity",
    "validate_rank_axioms",
    "ValidationReport",
    "vertex_support",
    "Violation",
]
