"""Toolkit for balanced and almost-balanced generalized de Bruijn sequences:
construction, verification, exhaustive census, and the 52-card color-stack
trick built on a (52, 5, 2) sequence."""

from .builder import BuildRequest, base_circuit, build_circuit, generate, merge_components
from .census import (
    ENUMERATION_GUARD,
    CensusQuery,
    CensusResult,
    count,
    enumerate_sequences,
    oracle_check,
)
from .errors import FormatError, InfeasibleError, ResourceGuardError
from .graph import (
    RANK_GUARD,
    Circuit,
    DeBruijnGraph,
    EdgeColor,
    EdgeSet,
    MalformedCircuitError,
    circuit_to_sequence,
    circuit_to_text,
    components,
    edge_color,
    edge_endpoints,
    edge_set_difference,
    euler_circuit_in,
    eulerian_circuit,
    in_edges,
    lift_circuit,
    out_edges,
    sequence_to_circuit,
)
from .seqcore import (
    HISTOGRAM_GUARD,
    BalanceMode,
    BalanceReport,
    CyclicSequence,
    Feasibility,
    Parameters,
    VerificationReport,
    WindowHistogram,
    balance,
    canonical_rotation,
    complement,
    feasible,
    verify,
    window_at,
    window_histogram,
)
from .stack import (
    Card,
    ColorSignal,
    CribSheet,
    ImpossibleSignalError,
    InvalidStackError,
    LookupResult,
    Stack,
    StackReport,
    auto_stack,
    builtin_stack,
    crib,
    lookup,
    reveal,
    validate_stack,
)

__version__ = "0.1.0"
