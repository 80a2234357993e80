"""Explicit normal subgroups of a free group avoiding a finitely generated,
infinite-index subgroup, built from Stallings graphs."""

from .errors import (
    AlphabetMismatch,
    CoreTooLarge,
    CoveringMapInvalid,
    EmptyArgumentList,
    FreeGroupError,
    LetterOutOfRange,
    NotInSubgroup,
    ParseError,
    VerificationFailed,
    WitnessSearchExhausted,
    WitnessTooLong,
)
from .factorization import FreeFactorization, express_in_basis, factorize, in_l, preimage_mark
from .hall import HallResult, complete
from .normal_core import GroupClosure, PermRep, cayley_cover, core_closure, coset_reps, perm_rep
from .stallings import (
    INFINITE,
    Basis,
    CoreGraph,
    basis_from_tree,
    build_core,
    canonical_form,
    index_or_infinite,
    membership,
    pullback,
    to_dot,
)
from .witness import (
    PipelineConfig,
    Status,
    VerificationSummary,
    WitnessReport,
    construct_witness,
    in_n,
    run_pipeline,
    verify_report,
)
from .words import (
    Word,
    conjugate,
    invert,
    left_normed_commutator,
    multiply,
    parse_word,
    reduce,
    render_word,
)

__version__ = "0.1.0"
