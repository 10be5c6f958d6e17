"""Exact computations in the Hopf algebra spanned by subgraph-counting series."""

from __future__ import annotations

from .config import Limits, get_limits, limits
from .enumeration import (
    euler_transform,
    filter_connected,
    generate_by_edges,
    generate_by_nodes,
)
from .errors import CapacityError, DomainError, ParseError, UGQSymError
from .graph import (
    EMPTY,
    CanonGraph,
    LabeledGraph,
    Permutation,
    automorphism_count,
    canonical,
    components,
    disjoint_union,
    is_connected,
    named,
    orbit,
    pack,
    relabel,
)
from .graph6 import decode_graph6, encode_graph6
from .hopf import (
    ONE,
    ZERO,
    HopfElement,
    TensorElement,
    antipode,
    basis,
    binomial_of_edge,
    coproduct,
    counit,
    multiply,
    structure_constant,
)
from .invariants import (
    BooleanVector,
    Deck,
    InvariantVector,
    KellyRecord,
    deck,
    elementary_eval,
    invariant_vector,
    iso_test,
    kelly_check,
    separating_family,
    vandermonde_vanishes,
)
from .series import TruncatedSeries, evaluate, evaluate_oracle, expand, restriction

__version__ = "0.1.0"
