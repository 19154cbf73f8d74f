"""
The 2-dimensional representation diag(v, conj v) and its local factor
"""
import sys
from typing import Union

from mpmath import mp

from ..exact.roots import RootOfUnity
from ..utils.errors import DomainError, PrecisionExhaustedError
from .models import ArtinPair

UNIT_TOLERANCE_BITS = 16
IDENTITY_TOLERANCE_BITS = 32
# builtin complex and float carry 53 bits whatever the working precision
FLOAT_UNIT_TOLERANCE = 16 * sys.float_info.epsilon


def _unit_tolerance(v, prec: int):
    if isinstance(v, (complex, float, int)):
        return mp.mpf(FLOAT_UNIT_TOLERANCE)
    return mp.mpf(2) ** (UNIT_TOLERANCE_BITS - prec)


def _unit_value(v, prec: int):
    if isinstance(v, RootOfUnity):
        return v.value(prec)[0]
    z = mp.mpc(v)
    if abs(abs(z) - 1) > _unit_tolerance(v, prec):
        raise DomainError(f"|v| must be 1, got {mp.nstr(abs(z), 15)}")
    return z


def artin_pair_combine(v: Union[RootOfUnity, complex], p: int, s, precision: int = 128) -> ArtinPair:
    """
    Local factor det(I - diag(v, conj v) p^-s)^-1 next to the product of the
    two degree-one factors (1 - v p^-s)^-1 (1 - conj(v) p^-s)^-1.

    Raises PrecisionExhaustedError when the two disagree beyond rounding.
    """
    with mp.workprec(precision):
        value = _unit_value(v, precision)
        z = mp.power(p, -mp.mpmathify(s))
        rep = mp.matrix([[value, 0], [0, mp.conj(value)]])
        det_term = mp.det(mp.eye(2) - rep * z)
        if det_term == 0:
            raise DomainError(f"det(I - rep p^-s) vanishes at p = {p}")
        factor = 1 / det_term
        product = 1 / (1 - value * z) / (1 - mp.conj(value) * z)
        if abs(factor - product) > abs(factor) * mp.mpf(2) ** (IDENTITY_TOLERANCE_BITS - precision):
            raise PrecisionExhaustedError(
                f"determinant factor {mp.nstr(factor, 15)} and product {mp.nstr(product, 15)} disagree at p = {p}"
            )
    return ArtinPair(
        representation=[[value, mp.mpc(0)], [mp.mpc(0), mp.conj(value)]],
        determinant_term=det_term,
        factor=factor,
        product_of_factors=product,
    )
