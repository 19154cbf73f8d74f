"""
The action Theta -> (A Theta + B)(C Theta + D)^-1 and its boundary
Moebius case
"""
import logging

from mpmath import mp

from ..exact.quadint import QuadInt
from ..linalg.fieldops import field_inverse, mat_mul
from ..linalg.matrix import IntMatrix
from ..utils.errors import DomainError, ShapeError, SingularMatrixError
from .groups import RsElement
from .skew import SkewMatrix

logger = logging.getLogger(__name__)


def _affine(block: IntMatrix, theta_rows, shift: IntMatrix, zero):
    """block * Theta + shift"""
    product = mat_mul([[zero + x for x in row] for row in block.rows], theta_rows, zero)
    return [[p + s for p, s in zip(prow, srow)] for prow, srow in zip(product, shift.rows)]


def apply_rs_action(g: RsElement, theta: SkewMatrix, precision: int = 128) -> SkewMatrix:
    """(A Theta + B)(C Theta + D)^-1, exact when Theta is exact"""
    if g.k != theta.dim:
        raise ShapeError(f"element acts on {g.k}x{g.k} matrices, got {theta.dim}x{theta.dim}")
    k = theta.dim
    if theta.is_exact:
        rows = theta.to_exact()
        zero, one = QuadInt.rational(0), QuadInt.rational(1)
        numerator = _affine(g.A, rows, g.B, zero)
        denominator = _affine(g.C, rows, g.D, zero)
        inverse = field_inverse(denominator, one=one, zero=zero)
        result = mat_mul(numerator, inverse, zero)
        for i in range(k):
            for j in range(k):
                if result[i][j] != -result[j][i]:
                    raise AssertionError("action produced a non-skew matrix")
        return SkewMatrix(tuple(tuple(row) for row in result))

    with mp.workprec(precision):
        M = theta.to_mp(precision)
        rows = [[M[i, j] for j in range(k)] for i in range(k)]
        zero, one = mp.mpf(0), mp.mpf(1)
        tiny = mp.mpf(2) ** (-(precision - 16))
        numerator = _affine(g.A, rows, g.B, zero)
        denominator = _affine(g.C, rows, g.D, zero)
        inverse = field_inverse(
            denominator, one=one, zero=zero,
            is_zero=lambda x: abs(x) < tiny, magnitude=abs,
        )
        result = mat_mul(numerator, inverse, zero)
        scale = max([abs(x) for row in result for x in row] + [one])
        skew_error = max(abs(result[i][j] + result[j][i]) for i in range(k) for j in range(k))
        if skew_error > scale * mp.mpf(2) ** (-(precision // 2)):
            raise AssertionError(f"action produced a non-skew matrix (error {mp.nstr(skew_error, 5)})")
        upper = [[result[i][j] for j in range(i + 1, k)] for i in range(k - 1)]
        return SkewMatrix.from_upper(upper)


def moebius_boundary(m: IntMatrix, theta: QuadInt) -> QuadInt:
    """(a theta + b)/(c theta + d) for (a, b; c, d) in SL(2, Z)"""
    if m.shape != (2, 2):
        raise ShapeError(f"expected a 2x2 matrix, got {m.nrows}x{m.ncols}")
    if m.det() != 1:
        raise DomainError(f"determinant must be 1, got {m.det()}")
    (a, b), (c, d) = m.rows
    denominator = theta * c + d
    if denominator == 0:
        raise SingularMatrixError(f"{m.format()} has a pole at {theta}")
    return (theta * a + b) / denominator
