"""
Unit index g_n: least exponent with epsilon^g in Z + (n*theta)Z
"""
from typing import List

from ..cfrac.units import fundamental_unit
from ..exact.quadint import QuadInt
from ..utils.errors import DomainError, RationalInputError
from .models import UnitIndexData

# g_n never exceeds 6n for the orders met here
INDEX_CAP = 6


def _index_for(epsilon: QuadInt, theta: QuadInt, n: int) -> int:
    power = epsilon
    for g in range(1, INDEX_CAP * n + 1):
        a, b = power.in_basis(theta)
        if a.denominator == 1 and b.denominator == 1 and b.numerator % n == 0:
            return g
        power = power * epsilon
    raise RuntimeError(f"unit index for n = {n} exceeds {INDEX_CAP * n}")


def unit_index(theta: QuadInt, n: int) -> UnitIndexData:
    if theta.is_rational:
        raise RationalInputError(f"{theta} is rational")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    epsilon = fundamental_unit(theta).epsilon
    return UnitIndexData(epsilon=epsilon, n=n, g=_index_for(epsilon, theta, n))


def unit_index_table(theta: QuadInt, bound: int) -> List[UnitIndexData]:
    """g_n for 1 <= n <= bound"""
    if theta.is_rational:
        raise RationalInputError(f"{theta} is rational")
    epsilon = fundamental_unit(theta).epsilon
    return [
        UnitIndexData(epsilon=epsilon, n=n, g=_index_for(epsilon, theta, n))
        for n in range(1, bound + 1)
    ]
