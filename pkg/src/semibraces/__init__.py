"""Finite inverse semi-braces, their product constructions, and the
Yang-Baxter maps they generate."""

from .brace import (
    InverseSemiBrace,
    PairMap,
    SemiBraceClassification,
    check_lambda_endomorphism,
    check_lambda_product_identity,
    check_right_axiom,
    classify_semibrace,
    lambda_rho,
    validate_semibrace,
)
from .constructions import (
    ActionFamily,
    BuiltProduct,
    Cocycle,
    build_asymmetric,
    build_double_semidirect,
    build_example_family,
    build_matched_product,
    build_matched_solution,
    build_semidirect,
    build_strong_semilattice,
    check_asymmetric_solution_conditions,
    double_semidirect_solution,
    matched_product_with_solution,
    semidirect_semigroup,
    validate_cocycle,
    validate_matched_system,
    validate_solution_matched_system,
)
from .core import (
    CarrierMap,
    Check,
    ClassificationRecord,
    FiniteSemigroup,
    InverseSemigroup,
    MagmaTable,
    classify_additive,
    classify_multiplicative,
    derive_inverses,
    enumerate_automorphisms,
    enumerate_endomorphisms,
    idempotents,
    is_morphism,
    validate_semigroup,
)
from .search import (
    SearchConfig,
    enumerate_additions,
    enumerate_inverse_semigroups,
    search_cocycles,
    survey,
)
from .solutions import (
    SolutionReport,
    check_braid,
    check_condsolution,
    check_equation,
    check_sufficient_conditions,
    degeneracy_profile,
    flip_compose,
    power_profile,
    solution_report,
    solutions_isomorphic,
)

__version__ = "0.1.0"
