"""Exact cohomology of exterior differential graded algebras over the
rationals, with the canonical-orientation pairing, its (det A)^2 scaling law,
and Massey triple products on 3-generator minimal models.
"""

from .cohomology import CohomologyClass, CohomologyRing
from .dga import DGA, Element, Generator, format_element, heisenberg, wedge
from .errors import (
    CupObstruction,
    DegenerateBasis,
    DifferentialSquareViolation,
    DomainError,
    ExtCohomError,
    InputError,
    NonHomogeneousDifferential,
    NonUniqueLift,
    NotACocycle,
    NotExact,
    NotHomogeneous,
    ParseError,
    ValidationError,
)
from .linalg import (
    Matrix,
    QuotientSpace,
    Subspace,
    kernel,
    project,
    quotient,
    rank,
    rref,
    solve,
    vector,
)
from .orientation import (
    MASSEY_SIGN_CONVENTION,
    BasisChange,
    MasseyTriple,
    PairingResult,
    det_squared_trial_changes,
    massey_relation_check,
    massey_triple,
    pairing,
    pairing_class_with_primitive,
    positive_generator,
    primitive,
    run_all_suites,
    run_det_squared_trials,
    run_massey_relation_trials,
    run_primitive_independence_trials,
    verify_det_squared,
)
from .parsing import load_model, parse_element, parse_model

__version__ = "0.1.0"

__all__ = [
    "BasisChange",
    "CohomologyClass",
    "CohomologyRing",
    "CupObstruction",
    "DGA",
    "DegenerateBasis",
    "DifferentialSquareViolation",
    "DomainError",
    "Element",
    "ExtCohomError",
    "Generator",
    "InputError",
    "MASSEY_SIGN_CONVENTION",
    "MasseyTriple",
    "Matrix",
    "NonHomogeneousDifferential",
    "NonUniqueLift",
    "NotACocycle",
    "NotExact",
    "NotHomogeneous",
    "PairingResult",
    "ParseError",
    "QuotientSpace",
    "Subspace",
    "ValidationError",
    "det_squared_trial_changes",
    "format_element",
    "heisenberg",
    "kernel",
    "load_model",
    "massey_relation_check",
    "massey_triple",
    "pairing",
    "pairing_class_with_primitive",
    "parse_element",
    "parse_model",
    "positive_generator",
    "primitive",
    "project",
    "quotient",
    "rank",
    "rref",
    "run_all_suites",
    "run_det_squared_trials",
    "run_massey_relation_trials",
    "run_primitive_independence_trials",
    "solve",
    "vector",
    "verify_det_squared",
    "wedge",
]
