"""
Fundamental units and the positive unit matrix with eigenvector (1, theta)
"""
import logging
from math import isqrt, log2
from typing import Tuple

from ..exact.quadint import QuadInt
from ..linalg.matrix import IntMatrix
from ..utils.errors import DomainError, RationalInputError
from .expansion import period_matrix, period_start
from .models import UnitData

logger = logging.getLogger(__name__)

# positivity of the unit matrix is reached quickly; this only guards loops
MAX_UNIT_POWER = 64


def _field_discriminant(D: int) -> int:
    return D if D % 4 == 1 else 4 * D


def fundamental_unit(theta: QuadInt) -> UnitData:
    """
    Fundamental unit of the multiplier ring of the lattice Z + Z*theta.

    For a monic theta this ring is Z[theta]. The unit is the eigenvalue
    q_l * t + q_(l-1) of the period matrix, t being the purely periodic
    complete quotient.
    """
    if theta.is_rational:
        raise RationalInputError(f"{theta} is rational")
    expansion, tail = period_start(theta)
    (_, _), (q, q1) = period_matrix(expansion.period).rows
    epsilon = tail * q + q1
    norm = epsilon.norm
    if abs(norm) != 1:
        raise AssertionError(f"unit {epsilon} has norm {norm}")
    c, b, a = theta.minimal_polynomial().coeffs
    disc = b * b - 4 * a * c
    f2, rem = divmod(disc, _field_discriminant(theta.D))
    f = isqrt(f2)
    if rem or f * f != f2:
        raise AssertionError(f"discriminant {disc} is not a square multiple of the field's")
    logger.debug("fundamental unit of disc %d: %s", disc, epsilon)
    return UnitData(epsilon=epsilon, order_index=f, discriminant=disc, norm=int(norm))


def _coordinates(value: QuadInt, theta: QuadInt) -> Tuple[int, int]:
    s, t = value.in_basis(theta)
    if s.denominator != 1 or t.denominator != 1:
        raise AssertionError(f"{value} does not lie in Z + Z*{theta}")
    return int(s), int(t)


def multiplication_matrix(value: QuadInt, theta: QuadInt) -> IntMatrix:
    """Rows are the coordinates of value*1 and value*theta in the basis (1, theta)"""
    return IntMatrix((_coordinates(value, theta), _coordinates(value * theta, theta)))


def unit_power_for_theta(theta: QuadInt) -> Tuple[IntMatrix, QuadInt, int]:
    """(A, lambda, m) with lambda = epsilon^m for the least m making A positive"""
    if theta.is_rational:
        raise RationalInputError(f"{theta} is rational")
    if theta.sign() <= 0:
        raise DomainError(f"theta must be positive, got {theta}")
    if theta.conjugate().sign() >= 0:
        raise DomainError(
            f"conjugate of {theta} is not negative; no positive matrix has (1, theta) as dominant eigenvector"
        )
    epsilon = fundamental_unit(theta).epsilon
    power = epsilon
    for m in range(1, MAX_UNIT_POWER + 1):
        A = multiplication_matrix(power, theta)
        if A.is_positive():
            _check_not_a_power(A, epsilon, theta, m)
            return A, power, m
        power = power * epsilon
    raise DomainError(f"no positive unit matrix up to exponent {MAX_UNIT_POWER}")


def _check_not_a_power(A: IntMatrix, epsilon: QuadInt, theta: QuadInt, m: int) -> None:
    # a positive k-th root would multiply by epsilon^(m/k), which is positive for a smaller power
    for k in range(2, int(log2(A.trace())) + 1):
        if m % k == 0 and multiplication_matrix(epsilon ** (m // k), theta).is_positive():
            raise AssertionError(f"unit matrix is the {k}-th power of a positive matrix")


def unit_matrix_for_theta(theta: QuadInt) -> IntMatrix:
    """Positive integer matrix A with A (1, theta)^T = epsilon^m (1, theta)^T, m minimal"""
    return unit_power_for_theta(theta)[0]
