"""Constructive cycle-versus-independent-set search.

A graph of order ``p*r + 1`` with ``p >= 4r + 5`` contains a cycle on
``p + 1`` vertices or an independent set on ``r + 1`` vertices;
:func:`ramsey_witness` finds one and returns a checkable certificate.
"""

from .chopping import OrderFamily, ReductionLadder, chop, collate, reduction_in_interval
from .egpaths import path_at_least, path_avoiding, path_one_exception
from .errors import (
    BadFamily,
    CycleRamseyError,
    DisconnectedInput,
    HypothesisViolated,
    NoChord,
    NotCovered,
    NotFound,
    OracleTooLarge,
    OutOfRange,
    PairNotFound,
    ParseError,
    PreconditionViolated,
    SawNotFound,
)
from .formats import from_edgelist, from_graph6, read_graph, to_edgelist, to_graph6
from .generators import clique_union_cross, extremal_graph, saw_tail, two_connected_random
from .graph import (
    BlockDecomposition,
    Cycle,
    Graph,
    Path,
    all_cycle_orders,
    all_path_orders,
    block_decomposition,
    complete_graph,
    components,
    cycle_graph,
    disjoint_union,
    empty_graph,
    independence_number,
    is_two_connected,
    max_independent_set,
    path_graph,
    petersen_graph,
    verify_certificate_part,
)
from .rng import XorShift64Star, derive
from .saws import (
    Saw,
    any_pair_paths,
    backbone_reduction,
    consecutive_pair_paths,
    endpair_paths,
    find_saw,
    saw_cycle,
)
from .witness import Certificate, Kind, cycle_around_saw, ramsey_witness, verify_certificate

__version__ = "0.1.0"
