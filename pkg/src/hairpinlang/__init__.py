"""hairpinlang: regularity analysis of iterated hairpin completions.

A completion step takes a word of the shape ``stem + a + middle + a~`` (where
``a~`` is the complement of the primer ``a``) and extends it with the
complement of the stem on the opposite end.  For words in which every primer
occurrence starts before every complement occurrence (non-crossing words) the
closure under iterated steps is either regular, with an explicit symbolic
construction, or provably not even context-free, with a checkable pumping
witness.  Independent brute-force enumeration and a polynomial membership
oracle back every verdict.
"""

__version__ = "0.1.0"

from .errors import (
    AlphabetMismatch,
    CrossingError,
    DomainError,
    HairpinError,
    InternalInvariantViolation,
    PreconditionError,
    PrimerSelfComplementary,
)
from .words import (
    DNA,
    Alphabet,
    Primer,
    alpha_index,
    in_star,
    is_prefix,
    is_proper_prefix,
    is_proper_suffix,
    is_suffix,
    occurrences,
    star_factorization,
)
from .analysis import (
    HairpinAnalysis,
    alpha_prefixes,
    alpha_suffix_complements,
    analyze,
    is_non_crossing,
    is_non_crossing_by_minimal_factor,
    minimal_factor_occurrences,
)
from .dynamics import (
    enumerate_bounded,
    hk_enumerate_bounded,
    hk_one_step,
    left_completions,
    member,
    one_step,
    right_completions,
)
from .expressions import (
    AtLeast,
    Atom,
    Concat,
    LangExpr,
    StarSet,
    Union,
    complement_image,
    enumerate_expr,
    render,
)
from .decision import (
    NONREGULAR,
    REGULAR,
    Verdict,
    Witness,
    condition_holds,
    construct_regular,
    decide,
    witness_noncf,
    witness_nonregular,
)

__all__ = [
    "__version__",
    "Alphabet",
    "DNA",
    "Primer",
    "HairpinAnalysis",
    "Verdict",
    "Witness",
    "LangExpr",
    "Atom",
    "StarSet",
    "AtLeast",
    "Concat",
    "Union",
    "HairpinError",
    "AlphabetMismatch",
    "PrimerSelfComplementary",
    "DomainError",
    "CrossingError",
    "PreconditionError",
    "InternalInvariantViolation",
    "REGULAR",
    "NONREGULAR",
    "is_prefix",
    "is_proper_prefix",
    "is_suffix",
    "is_proper_suffix",
    "occurrences",
    "in_star",
    "star_factorization",
    "alpha_index",
    "is_non_crossing",
    "is_non_crossing_by_minimal_factor",
    "minimal_factor_occurrences",
    "alpha_prefixes",
    "alpha_suffix_complements",
    "analyze",
    "right_completions",
    "left_completions",
    "one_step",
    "enumerate_bounded",
    "member",
    "hk_one_step",
    "hk_enumerate_bounded",
    "render",
    "enumerate_expr",
    "complement_image",
    "condition_holds",
    "decide",
    "construct_regular",
    "witness_nonregular",
    "witness_noncf",
]
