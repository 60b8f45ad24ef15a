"""Exact arithmetic in Q(i), Q(i)[s, s^-1] and Q(i)(s)."""

from .gaussrat import ONE, ZERO, GaussRat, I
from .polygcd import euclid_gcd, modular_gcd, poly_gcd, squarefree_decomposition
from .ratfunc import (
    POLE_TOLERANCE,
    RatFunc,
    conj_i,
    eval_numeric,
    rf_arith,
    rf_normalize,
    subst_q_inverse,
)
from .spoly import SPoly

__all__ = [
    "GaussRat", "SPoly", "RatFunc", "ONE", "ZERO", "I",
    "rf_arith", "rf_normalize", "subst_q_inverse", "conj_i", "eval_numeric",
    "poly_gcd", "euclid_gcd", "modular_gcd", "squarefree_decomposition",
    "POLE_TOLERANCE",
]
