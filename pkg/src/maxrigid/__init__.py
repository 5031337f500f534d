"""Exact combinatorics of maximal rigid interval-decomposable representations.

The library models interval modules on the unit interval subdivided at
breakpoints, decides rigidity through an exact pairwise compatibility
predicate, enumerates maximal rigid configurations directly and through a
finite-quiver correspondence, and evaluates the closed-form counts with
arbitrary-precision integers.  Every nontrivial computation has an
independent oracle exercised by the test suite.
"""

__version__ = "0.1.0"

from .intervals import (
    CLOSED,
    OPEN,
    BoundaryKind,
    EmptyIntervalError,
    Interval,
    InvalidIntervalError,
    InvertedIntervalError,
    Point,
    compatible,
)
from .finite import (
    FiniteInterval,
    LinearQuiver,
    ResourceLimitError,
    RigidSet,
    all_intervals,
    enumerate_maximal_rigid,
    euler_form,
    ext_dim,
    ext_dim_resolution,
    hom_dim,
    hom_dim_bruteforce,
    is_maximal_rigid_set,
    is_rigid_set,
    is_tilting,
)
from .continuous import (
    LEFT,
    RIGHT,
    BadAnchorRangeError,
    BreakpointRep,
    Breakpoints,
    BreakSummand,
    DuplicateFamilyError,
    DuplicateSummandError,
    FamilyChoice,
    InvalidRepError,
    MissingFamilyError,
    NotRigidError,
    Profile,
    SampledModel,
    Side,
    all_break_summands,
    all_family_choices,
    canonicalize,
    endpoint_profile,
    enumerate_maximal_rigid_reps,
    is_maximal_rigid,
    is_rigid,
    is_uniform,
    sample_model,
    sample_offsets,
    validate_rep,
)
from .bridge import (
    AmbiguousAnchorError,
    NoAnchorError,
    RefinedRep,
    condense,
    discretized_compatible,
    expand,
    fiber_reps,
    forced_anchor,
    project,
    pull_back_summands,
    refined_quiver,
    segment_quiver,
    to_refined,
)
from .counting import (
    CountReport,
    binomial,
    catalan,
    continuous_count,
    projected_count,
)

__all__ = [
    "BoundaryKind",
    "CLOSED",
    "OPEN",
    "Point",
    "Interval",
    "compatible",
    "InvalidIntervalError",
    "EmptyIntervalError",
    "InvertedIntervalError",
    "LinearQuiver",
    "FiniteInterval",
    "RigidSet",
    "ResourceLimitError",
    "all_intervals",
    "hom_dim",
    "hom_dim_bruteforce",
    "ext_dim",
    "ext_dim_resolution",
    "euler_form",
    "is_rigid_set",
    "is_tilting",
    "is_maximal_rigid_set",
    "enumerate_maximal_rigid",
    "Side",
    "LEFT",
    "RIGHT",
    "BreakSummand",
    "FamilyChoice",
    "Breakpoints",
    "BreakpointRep",
    "SampledModel",
    "Profile",
    "InvalidRepError",
    "DuplicateSummandError",
    "DuplicateFamilyError",
    "MissingFamilyError",
    "BadAnchorRangeError",
    "NotRigidError",
    "sample_offsets",
    "all_break_summands",
    "all_family_choices",
    "validate_rep",
    "sample_model",
    "endpoint_profile",
    "is_uniform",
    "is_rigid",
    "is_maximal_rigid",
    "canonicalize",
    "enumerate_maximal_rigid_reps",
    "refined_quiver",
    "segment_quiver",
    "RefinedRep",
    "to_refined",
    "condense",
    "expand",
    "project",
    "pull_back_summands",
    "forced_anchor",
    "NoAnchorError",
    "AmbiguousAnchorError",
    "fiber_reps",
    "discretized_compatible",
    "binomial",
    "catalan",
    "projected_count",
    "continuous_count",
    "CountReport",
]
