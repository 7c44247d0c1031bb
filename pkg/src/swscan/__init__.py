"""Striped Smith-Waterman with a scan-based, correction-free inner kernel.

Library layout:

- ``vectors``: saturating lane-vector abstraction with operation counters.
- ``scoring``: alphabets, substitution matrices, affine gap penalties.
- ``profile``: striped query profiles and the stripe index mapping.
- ``oracle``: exact scalar DP and the sequential correction/scan references.
- ``kernels``: the lazy-F and scan alignment kernels plus the transformation
  chain of equivalent correction routines.
- ``formats`` / ``runner`` / ``cli``: FASTA and matrix-file I/O, pair
  generation, and the batch alignment front end.
"""

from .formats import FastaRecord, MalformedFasta, MalformedMatrix, parse_fasta, parse_matrix
from .kernels import (
    AlignmentResult,
    KernelState,
    ProfileMismatch,
    align_lazyf,
    align_scan,
    correct_inverted,
    correct_scan,
    correct_separated,
    weighted_max_scan,
)
from .oracle import DpMatrices, correct_lazyf_full, scan_sequential, sw_scalar
from .profile import (
    EmptyQuery,
    PositionOutOfRange,
    QueryProfile,
    build_profile,
    stripe_index,
)
from .runner import RunConfig, generate_pairs, run
from .scoring import Alphabet, ScoringScheme, SymbolOutOfAlphabet
from .vectors import (
    SCORE_MAX,
    NumpyBackend,
    OpCounters,
    ReferenceBackend,
    ScoreVector,
    VectorSpec,
)

__version__ = "0.1.0"

__all__ = [
    "AlignmentResult",
    "align_lazyf",
    "align_scan",
    "Alphabet",
    "build_profile",
    "correct_inverted",
    "correct_lazyf_full",
    "correct_scan",
    "correct_separated",
    "DpMatrices",
    "EmptyQuery",
    "FastaRecord",
    "generate_pairs",
    "KernelState",
    "MalformedFasta",
    "MalformedMatrix",
    "NumpyBackend",
    "OpCounters",
    "parse_fasta",
    "parse_matrix",
    "PositionOutOfRange",
    "ProfileMismatch",
    "QueryProfile",
    "ReferenceBackend",
    "run",
    "RunConfig",
    "scan_sequential",
    "ScoreVector",
    "SCORE_MAX",
    "ScoringScheme",
    "stripe_index",
    "sw_scalar",
    "SymbolOutOfAlphabet",
    "VectorSpec",
    "weighted_max_scan",
]
