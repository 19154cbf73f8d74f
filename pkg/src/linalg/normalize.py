"""
Normalization of 2x2 endomorphism matrices (a, 1; c, d)
"""
from typing import Tuple

from ..utils.errors import DomainError, ShapeError
from .matrix import IntMatrix


def normalize_endomorphism(m: IntMatrix) -> Tuple[IntMatrix, IntMatrix]:
    """
    Conjugate (a, 1; c, d) to (a + d, 1; c - ad, 0).

    Returns (normalized, S) with S = (1, 0; d, 1) and S^-1 * m * S = normalized.
    """
    if m.shape != (2, 2):
        raise ShapeError(f"expected a 2x2 matrix, got {m.nrows}x{m.ncols}")
    (a, b), (c, d) = m.rows
    if b != 1:
        raise DomainError(f"top-right entry must be 1, got {b}")
    if m.det() == 0:
        raise DomainError("endomorphism matrix has zero determinant")
    S = IntMatrix(((1, 0), (d, 1)))
    S_inv = IntMatrix(((1, 0), (-d, 1)))
    normalized = S_inv * m * S
    assert normalized == IntMatrix(((a + d, 1), (c - a * d, 0)))
    return normalized, S
