"""Bruhat order on symmetric groups: reduced words, intervals, poset
isomorphism, and bounded factor-forcing searches."""

from .bruhat import (
    Interval,
    atoms,
    bruhat_leq,
    coatom_avoiding_position,
    coatoms,
    covers_above,
    covers_below,
    ideal,
    interval,
    interval_to_json,
)
from .forcing import (
    Counterexample,
    FactorCertificate,
    ForcingVerdict,
    certificate_is_shifted_longest,
    factor_deletion,
    forces_factor,
    intervals_isomorphic_to,
)
from .limits import DEFAULT_LIMITS, CapExceeded, Limits
from .perms import (
    Perm,
    apply_left,
    apply_right,
    compose,
    embed,
    format_perm,
    identity,
    inverse,
    inversions,
    length,
    longest,
    parse_perm,
)
from .posets import (
    AtlasResult,
    AtlasRow,
    RankedPoset,
    atlas,
    canonical_form,
    chain,
    direct_product,
    is_isomorphic,
    poset_from_interval,
    singleton,
    to_dot,
)
from .structure import (
    Decomposition,
    NonForcingWitness,
    SwapString,
    decompose,
    detect_swap_string,
    is_thin,
    nonforcing_witness,
    swap_string_factorization,
    verify_b_is_shifted_longest,
)
from .words import (
    ReducedWordSet,
    Word,
    delete_factor,
    evaluate,
    format_word,
    is_reduced,
    is_subword,
    iter_reduced_words,
    lex_least_reduced_word,
    parse_word,
    reduced_words,
    shift,
)

__version__ = "0.1.0"
