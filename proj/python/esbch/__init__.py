"""Binary BCH encode/decode with early-stopped Berlekamp-Massey decoding.

The heavy lifting lives in the compiled ``_esbch`` extension; this package
re-exports its public surface.
"""

from ._esbch import (
    BchCode,
    BoundInvalid,
    CapacityExceeded,
    DecodeOutcome,
    DecodeStatus,
    DegreeMismatch,
    DivisionByZero,
    DomainError,
    GaloisField,
    InstanceTooLarge,
    LengthMismatch,
    NegativeProbability,
    NonPrimitivePolynomial,
    OracleReport,
    OracleWeightStats,
    SimBucket,
    SimSummary,
    StopCriterion,
    __version__,
    binary_entropy,
    binomial_tail,
    complexity_bounds,
    exhaustive_oracle,
    log2_binomial,
    p_mf_binomial_log2,
    p_mf_exponent_log2,
    p_ud_log2,
    reduction_ratio,
    relative_entropy,
    rng_name,
    run_trials,
)

__all__ = [
    "BchCode",
    "BoundInvalid",
    "CapacityExceeded",
    "DecodeOutcome",
    "DecodeStatus",
    "DegreeMismatch",
    "DivisionByZero",
    "DomainError",
    "GaloisField",
    "InstanceTooLarge",
    "LengthMismatch",
    "NegativeProbability",
    "NonPrimitivePolynomial",
    "OracleReport",
    "OracleWeightStats",
    "SimBucket",
    "SimSummary",
    "StopCriterion",
    "__version__",
    "binary_entropy",
    "binomial_tail",
    "complexity_bounds",
    "exhaustive_oracle",
    "log2_binomial",
    "p_mf_binomial_log2",
    "p_mf_exponent_log2",
    "p_ud_log2",
    "reduction_ratio",
    "relative_entropy",
    "rng_name",
    "run_trials",
]
