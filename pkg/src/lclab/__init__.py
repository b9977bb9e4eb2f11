"""Exact graded pieces of local cohomology at monomial ideals.

The ring is K[Y_1..Y_d][X_1..X_m] with deg Y = 0 and deg X = 1 (char 0);
everything is computed over exact integers — no floating point anywhere.
"""

from .exactlin import IntegerPolynomial, binom_ext
from .monocech import (
    INFINITE,
    UNIT_IDEAL,
    Contributor,
    DimValue,
    InfiniteDimsError,
    MonomialIdeal,
    PatternReport,
    PatternShape,
    ShapeViolationError,
    UnitIdealError,
    VariableContext,
    cohomology_profile,
    degree_count,
    hilbert_pair,
    localize,
    normalize,
    pattern_report,
    piece_dimension,
    piece_nonzero,
    slice_basis,
    slice_complex,
    strand_dimension,
    support_dim,
    support_min_primes,
    x_lattice_count,
)
from .verify import (
    CheckResult,
    GoldenCase,
    VerificationReport,
    golden_corpus,
    oracle_compare,
    random_ideal,
    run_corpus,
    theorem_suite,
    window_oracle,
)
from .weylact import (
    KoszulConvention,
    LocalCohomologyModule,
    LocalizationModule,
    NotEulerianError,
    derham_homology,
    euler_eigencheck,
    four_term_check,
    gen_eulerian_exponent,
    koszul_homology_X,
    koszul_homology_Y,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITE",
    "UNIT_IDEAL",
    "CheckResult",
    "Contributor",
    "DimValue",
    "GoldenCase",
    "InfiniteDimsError",
    "IntegerPolynomial",
    "KoszulConvention",
    "LocalCohomologyModule",
    "LocalizationModule",
    "MonomialIdeal",
    "NotEulerianError",
    "PatternReport",
    "PatternShape",
    "ShapeViolationError",
    "UnitIdealError",
    "VariableContext",
    "VerificationReport",
    "binom_ext",
    "cohomology_profile",
    "degree_count",
    "derham_homology",
    "euler_eigencheck",
    "four_term_check",
    "gen_eulerian_exponent",
    "golden_corpus",
    "hilbert_pair",
    "koszul_homology_X",
    "koszul_homology_Y",
    "localize",
    "normalize",
    "oracle_compare",
    "pattern_report",
    "piece_dimension",
    "piece_nonzero",
    "random_ideal",
    "run_corpus",
    "slice_basis",
    "slice_complex",
    "strand_dimension",
    "support_dim",
    "support_min_primes",
    "theorem_suite",
    "window_oracle",
    "x_lattice_count",
]
