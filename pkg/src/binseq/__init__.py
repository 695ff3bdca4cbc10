"""Exact subsequence-frequency analysis of binary words."""

from .errors import (
    BinseqError,
    BudgetExceeded,
    EmptyPattern,
    InvalidCharacter,
    NotCovered,
    OutOfStatedRange,
    PatternTooLong,
    PreconditionViolated,
)
from .extremal import (
    ExtremalResult,
    MaxSequenceResult,
    ProductSequenceResult,
    SequenceReport,
    alternating_optimal_check,
    alternating_word,
    classify_internal_zeros,
    internal_zero_report,
    max_sequence,
    max_three_run,
    optimal_words,
    product_sequence_analysis,
    sequence_predicates,
)
from .genfunc import BivariateSeries, gf_coefficients
from .spectrum import (
    DEFAULT_ENUMERATION_CAP,
    IdentityReport,
    Spectrum,
    brute_spectrum,
    closed_form_B,
    length_plus_one_spectrum,
    verify_identities,
)
from .wilf import (
    EquivalenceClassing,
    TrivialClass,
    fingerprint,
    run_size_multiset,
    strong_wilf_scan,
    trivial_class,
)
from .words import (
    BinaryWord,
    RunProfile,
    binomial,
    complement,
    count_occurrences,
    parse_word,
    reverse,
    run_decompose,
    transform,
    word_from_runs,
)

__version__ = "0.1.0"
