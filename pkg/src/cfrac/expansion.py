"""
Exact periodic continued fractions of quadratic irrationals
"""
from math import isqrt
from typing import Dict, List, Sequence, Tuple

from ..exact.quadint import QuadInt
from ..linalg.matrix import IntMatrix
from ..utils.errors import DomainError, RationalInputError
from .models import CfExpansion

# (P + sqrt(d)) / Q with Q | d - P^2
Surd = Tuple[int, int, int]


def to_surd(theta: QuadInt) -> Surd:
    """Write theta as (P + sqrt(d))/Q with Q dividing d - P^2"""
    if theta.is_rational:
        raise RationalInputError(f"{theta} is rational")
    sign = 1 if theta.b > 0 else -1
    P, d, Q = sign * theta.a, theta.b * theta.b * theta.D, sign * theta.c
    if (d - P * P) % Q:
        P, d, Q = P * abs(Q), d * Q * Q, Q * abs(Q)
    return P, d, Q


def surd_value(state: Surd) -> QuadInt:
    P, d, Q = state
    return QuadInt(P, 1, Q, d)


def surd_floor(P: int, d: int, Q: int) -> int:
    r = isqrt(d)
    if Q > 0:
        return (P + r) // Q
    return (P + r + 1) // Q


def _step(P: int, d: int, Q: int) -> Tuple[int, int, int]:
    a = surd_floor(P, d, Q)
    P2 = a * Q - P
    return a, P2, (d - P2 * P2) // Q


def cf_expand(theta: QuadInt) -> CfExpansion:
    """Simple continued fraction with minimal period via repeated complete quotients"""
    return period_start(theta)[0]


def period_start(theta: QuadInt) -> Tuple[CfExpansion, QuadInt]:
    """The expansion and the purely periodic complete quotient where the period begins"""
    P, d, Q = to_surd(theta)
    seen: Dict[Tuple[int, int], int] = {}
    digits: List[int] = []
    while (P, Q) not in seen:
        seen[(P, Q)] = len(digits)
        a, P, Q = _step(P, d, Q)
        digits.append(a)
    start = seen[(P, Q)]
    expansion = CfExpansion(preperiod=digits[:start], period=digits[start:])
    return expansion, surd_value((P, d, Q))


def convergents(digits: Sequence[int]) -> List[Tuple[int, int]]:
    """Successive (p_k, q_k) of [a_0; a_1, ...]"""
    out = []
    p_prev, p = 0, 1
    q_prev, q = 1, 0
    for a in digits:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        out.append((p, q))
    return out


def period_matrix(digits: Sequence[int]) -> IntMatrix:
    """Product of (a, 1; 1, 0) over the digits, left to right"""
    if not digits:
        raise DomainError("empty period")
    M = IntMatrix.identity(2)
    for a in digits:
        M = M * IntMatrix(((a, 1), (1, 0)))
    return M


def cf_value(expansion: CfExpansion) -> QuadInt:
    """Fold the digits back into the exact quadratic irrational"""
    if not expansion.period:
        raise DomainError("expansion has no period")
    (p, p1), (q, q1) = period_matrix(expansion.period).rows
    # y = (p y + p1) / (q y + q1) with y > 1
    y = QuadInt.from_quadratic(q, q1 - p, -p1, larger=True)
    for a in reversed(expansion.preperiod):
        y = a + y.inverse()
    return y
