"""Column subset selection: randomized leverage-score sampling followed by a
strong rank-revealing QR, with exhaustive and pivoted-QR baselines.

All matrices are 2-D float64 numpy arrays; column indices are 0-based.
"""

from ._cssx import (
    AllTrialsFailedError,
    BudgetExceededError,
    ColumnSample,
    CsspResult,
    InvalidSelectionError,
    MatrixParseError,
    NonFiniteError,
    NonTerminationError,
    OracleResult,
    RankDeficientError,
    RrqrSelection,
    SampleRankLossError,
    SvdFactors,
    ZeroMatrixError,
    apply_sample,
    best_rank_k_residual,
    boost,
    choose_c,
    exhaustive_best,
    frobenius_bound_factor,
    frobenius_norm,
    gaussian_matrix,
    hybrid_probabilities,
    leverage_probabilities,
    low_rank_plus_noise,
    pivoted_qr_baseline,
    projection_residual,
    pseudoinverse,
    read_matrix,
    sample_exactly_c,
    singular_values,
    spectral_bound,
    spectral_norm,
    strong_rrqr_select,
    svd,
    two_stage_select,
    uniform_baseline,
)

__all__ = [
    "AllTrialsFailedError",
    "BudgetExceededError",
    "ColumnSample",
    "CsspResult",
    "InvalidSelectionError",
    "MatrixParseError",
    "NonFiniteError",
    "NonTerminationError",
    "OracleResult",
    "RankDeficientError",
    "RrqrSelection",
    "SampleRankLossError",
    "SvdFactors",
    "ZeroMatrixError",
    "apply_sample",
    "best_rank_k_residual",
    "boost",
    "choose_c",
    "exhaustive_best",
    "frobenius_bound_factor",
    "frobenius_norm",
    "gaussian_matrix",
    "hybrid_probabilities",
    "leverage_probabilities",
    "low_rank_plus_noise",
    "pivoted_qr_baseline",
    "projection_residual",
    "pseudoinverse",
    "read_matrix",
    "sample_exactly_c",
    "singular_values",
    "spectral_bound",
    "spectral_norm",
    "strong_rrqr_select",
    "svd",
    "two_stage_select",
    "uniform_baseline",
]

__version__ = "0.1.0"
