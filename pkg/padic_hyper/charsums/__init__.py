"""
Direct character-sum oracles over F_p.
"""

from .sums import (
    CharSumCtx,
    jacobi_args,
    jacobi_sum,
    jacobi_via_gamma,
    kronecker_m4,
    legendre,
    lemma_args,
    lemma_nonquad_lhs,
    lemma_nonquad_rhs,
    lemma_quad_lhs,
    lemma_quad_rhs,
)

__all__ = [
    "CharSumCtx",
    "jacobi_args",
    "jacobi_sum",
    "jacobi_via_gamma",
    "kronecker_m4",
    "legendre",
    "lemma_args",
    "lemma_nonquad_lhs",
    "lemma_nonquad_rhs",
    "lemma_quad_lhs",
    "lemma_quad_rhs",
]
