"""Exact computations with degree-g modular form expansions.

The heavy lifting happens in the compiled extension; this package just
re-exports it.
"""

from ._core import (
    DomainError,
    QExpansion,
    bracket,
    commutation_check,
    coset_reps,
    cyclotomic_poly,
    delta,
    dominance_witness,
    dominant_lower_set,
    eisenstein,
    eta_exponent,
    hecke_apply,
    hecke_eigenvalue,
    is_dominant,
    main_theorem_verify_random,
    positive_coroots,
    reduce_mod_p,
    selftest,
    theta_bn,
    theta_bn_via_bracket,
    truncate,
    weights_of_irrep,
)

__all__ = [
    "DomainError",
    "QExpansion",
    "bracket",
    "commutation_check",
    "coset_reps",
    "cyclotomic_poly",
    "delta",
    "dominance_witness",
    "dominant_lower_set",
    "eisenstein",
    "eta_exponent",
    "hecke_apply",
    "hecke_eigenvalue",
    "is_dominant",
    "main_theorem_verify_random",
    "positive_coroots",
    "reduce_mod_p",
    "selftest",
    "theta_bn",
    "theta_bn_via_bracket",
    "truncate",
    "weights_of_irrep",
]

__version__ = "0.1.0"
