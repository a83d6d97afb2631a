"""Finite left braces, their invariants, and involutive Yang-Baxter solutions."""

from .abelian import (
    FiniteAbelianGroup,
    PermutationGroup,
    abelian_group_types,
    abelian_structure,
    automorphism_group,
    closure,
    is_nilpotent_group,
    make_group,
)
from .brace import (
    BraceSubset,
    BraceTraits,
    LeftBrace,
    SylowComponent,
    sylow_decompose,
    validate_brace,
)
from .census import (
    BraceCensus,
    CensusEntry,
    are_isomorphic,
    enumerate_braces,
)
from .checks import (
    ALL_CHECKS,
    FAIL,
    HYPOTHESIS_NOT_MET,
    PASS,
    CheckReport,
    run_brace_checks,
    run_census_checks,
)
from .documents import (
    ActionDocument,
    BraceDocument,
    SolutionDocument,
    parse_action_document,
    parse_brace_document,
    parse_solution_document,
    serialize_action_document,
    serialize_brace_document,
    serialize_solution_document,
)
from .errors import (
    ActionError,
    BraceLabError,
    BraceValidationError,
    DocumentError,
    InternalCheckError,
    InvalidPresentationError,
    ResourceLimitError,
    SolutionValidationError,
)
from .fqpoly import FqPolynomial, annihilation_exponent, poly_gcd, shifted_power
from .products import (
    BraceAction,
    direct_sum,
    make_action,
    semidirect,
    trivial_action,
    wreath,
)
from .solutions import (
    SetTheoreticSolution,
    from_brace,
    mpl_solution,
    permutation_group_order,
    retract_solution,
    retraction_tower_sizes,
    solution_permutation_group,
    validate_solution,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_CHECKS",
    "ActionDocument",
    "ActionError",
    "BraceAction",
    "BraceCensus",
    "BraceDocument",
    "BraceLabError",
    "BraceSubset",
    "BraceTraits",
    "BraceValidationError",
    "CensusEntry",
    "CheckReport",
    "DocumentError",
    "FAIL",
    "FiniteAbelianGroup",
    "FqPolynomial",
    "HYPOTHESIS_NOT_MET",
    "InternalCheckError",
    "InvalidPresentationError",
    "LeftBrace",
    "PASS",
    "PermutationGroup",
    "ResourceLimitError",
    "SetTheoreticSolution",
    "SolutionDocument",
    "SolutionValidationError",
    "SylowComponent",
    "abelian_group_types",
    "abelian_structure",
    "annihilation_exponent",
    "are_isomorphic",
    "automorphism_group",
    "closure",
    "direct_sum",
    "enumerate_braces",
    "from_brace",
    "is_nilpotent_group",
    "make_group",
    "make_action",
    "mpl_solution",
    "parse_action_document",
    "parse_brace_document",
    "parse_solution_document",
    "permutation_group_order",
    "poly_gcd",
    "retract_solution",
    "retraction_tower_sizes",
    "run_brace_checks",
    "run_census_checks",
    "semidirect",
    "serialize_action_document",
    "serialize_brace_document",
    "serialize_solution_document",
    "shifted_power",
    "solution_permutation_group",
    "sylow_decompose",
    "trivial_action",
    "validate_brace",
    "validate_solution",
    "wreath",
]
