"""Exact computation and classification of recurrences
a_0 = g(0), a_n = f(n) a_{n-1} + g(n) h(n)^n."""

from ._core import (
    CheckpointCorrupt,
    DivisionByZero,
    NonIntegerValue,
    Poly,
    PreconditionViolated,
    SeqSpec,
    SyntaxError,
    ZeroPolynomial,
    candidate_coeff,
    certify_finite_prime_set,
    classify,
    deviation,
    empirical_geometric_tail,
    factor,
    family,
    family_names,
    is_prime,
    parse_poly,
    prime_growth_curve,
    prime_set_up_to,
    print_poly,
    product_closed_form,
    run_cli,
    terms,
)

__all__ = [
    "CheckpointCorrupt",
    "DivisionByZero",
    "NonIntegerValue",
    "Poly",
    "PreconditionViolated",
    "SeqSpec",
    "SyntaxError",
    "ZeroPolynomial",
    "candidate_coeff",
    "certify_finite_prime_set",
    "classify",
    "deviation",
    "empirical_geometric_tail",
    "factor",
    "family",
    "family_names",
    "is_prime",
    "parse_poly",
    "prime_growth_curve",
    "prime_set_up_to",
    "print_poly",
    "product_closed_form",
    "run_cli",
    "terms",
]
