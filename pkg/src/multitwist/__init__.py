"""Torelli multitwists on reduction system graphs, decided combinatorially
and cross-checked through the integer symplectic action on homology."""

from .edge_classes import EdgeClassification, classify, verify_classification
from .homology import (
    HomologyModel,
    SymplecticLattice,
    build_model,
    conjecture_counterexample,
    is_identity_action,
    multitransvection,
    twist_action,
)
from .multigraph import Cycle, Edge, Multigraph, SpanningTree, Trail
from .surface import SurfaceModel, check_bounds, gen_extremal, gen_random, genus, omega, validate
from .torelli import (
    BPMap,
    Multitwist,
    SeparatingTwist,
    decompose,
    is_gamma_m,
    is_torelli,
    torelli_basis,
    torelli_rank,
    zero_on_all_cycles,
    zero_on_all_cycles_oracle,
)

__version__ = "0.1.0"
