"""Norms of the Bloch-to-Bergman inclusion, closed-form bounds and extremal searches."""

from ._bergman import (
    ArgumentError,
    BracketError,
    ConvergenceError,
    DegenerateInputError,
    DomainError,
    Function,
    RangeError,
    SearchError,
    UnsupportedError,
    a2_norm_series,
    bergman_norm,
    besov_norm,
    beta,
    bloch_norm,
    bound_2n,
    contractivity_threshold,
    gamma,
    growth_lower,
    growth_upper,
    ln_gamma,
    normalize_bloch,
    p_alpha_bracket,
    pointwise_bound,
    run_cli,
    search_c_tilde,
    verify_identities,
    verify_inclusion,
)

__all__ = [name for name in dir() if not name.startswith("_")]
