"""Exact combinatorics of numerical semigroups and Herzog-Northcott ideals.

The public surface mirrors the four library areas: semigroup invariants
(:mod:`hnlab.semigroup`), oversemigroup and symmetric-cover search
(:mod:`hnlab.oversemigroups`), ideal data built from exponent pairs
(:mod:`hnlab.hn`), and the decomposition case taxonomy with its worked
example catalogue (:mod:`hnlab.catalogue`).  The command-line entry point
lives in :mod:`hnlab.cli`.
"""

from .catalogue import (
    CaseRecord,
    ConsistencyReport,
    ExampleReport,
    ExampleSpec,
    Factor,
    WeightAssignment,
    WeightCheck,
    binomial_weight_vanishes,
    catalogue_entries,
    check_consistency,
    enumerate_cases,
    example_spec,
    load_catalogue,
    verify_example,
)
from .errors import (
    BadMultiplicity,
    DimensionMismatch,
    DomainError,
    EmptyInput,
    FrobeniusCapExceeded,
    HnlabError,
    InconsistentRecord,
    InvalidGenerator,
    InvariantViolation,
    NonCofinite,
    NotImplementedRange,
    NotInCatalogue,
    NotMember,
    UnsupportedMultiplicity,
)
from .hn import (
    Binomial,
    ExponentPair,
    HNIdeal,
    TheoremOutcome,
    TheoremVerdict,
    build,
    normalize,
    solve_exponents,
    theorem_verdict,
    vanishing_check,
)
from .oversemigroups import (
    DELTA,
    CoverQuery,
    CoverVerdict,
    DeltaReport,
    candidate_triples,
    oversemigroups_with_multiplicity,
    symmetric_cover,
    verify_delta,
    witness_families,
)
from .semigroup import (
    GapProfile,
    GeneratorSet,
    NumericalSemigroup,
    TraitReport,
    apery_set,
    contains,
    from_generators,
    is_irreducible,
    is_symmetric,
    profile,
    pseudo_frobenius,
    traits,
)

__version__ = "0.1.0"

__all__ = [
    "BadMultiplicity",
    "Binomial",
    "CaseRecord",
    "ConsistencyReport",
    "CoverQuery",
    "CoverVerdict",
    "DELTA",
    "DeltaReport",
    "DimensionMismatch",
    "DomainError",
    "EmptyInput",
    "ExampleReport",
    "ExampleSpec",
    "ExponentPair",
    "Factor",
    "FrobeniusCapExceeded",
    "GapProfile",
    "GeneratorSet",
    "HNIdeal",
    "HnlabError",
    "InconsistentRecord",
    "InvalidGenerator",
    "InvariantViolation",
    "NonCofinite",
    "NotImplementedRange",
    "NotInCatalogue",
    "NotMember",
    "NumericalSemigroup",
    "TheoremOutcome",
    "TheoremVerdict",
    "TraitReport",
    "UnsupportedMultiplicity",
    "WeightAssignment",
    "WeightCheck",
    "apery_set",
    "binomial_weight_vanishes",
    "build",
    "candidate_triples",
    "catalogue_entries",
    "check_consistency",
    "contains",
    "enumerate_cases",
    "example_spec",
    "from_generators",
    "is_irreducible",
    "is_symmetric",
    "load_catalogue",
    "normalize",
    "oversemigroups_with_multiplicity",
    "profile",
    "pseudo_frobenius",
    "solve_exponents",
    "symmetric_cover",
    "theorem_verdict",
    "traits",
    "vanishing_check",
    "verify_delta",
    "verify_example",
    "witness_families",
]
