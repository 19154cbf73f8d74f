"""
Exact integer and rational linear algebra
"""
from .fieldops import field_inverse, mat_mul, null_vector
from .matrix import IntMatrix, char_poly
from .models import PFData, SnfResult
from .normalize import normalize_endomorphism
from .perron import birkhoff_contraction, perron_frobenius
from .snf import hermite_basis, invariant_factors, similar_via_char_matrix, smith_normal_form

__all__ = [
    "IntMatrix",
    "PFData",
    "SnfResult",
    "birkhoff_contraction",
    "char_poly",
    "field_inverse",
    "hermite_basis",
    "invariant_factors",
    "mat_mul",
    "normalize_endomorphism",
    "null_vector",
    "perron_frobenius",
    "similar_via_char_matrix",
    "smith_normal_form",
]
