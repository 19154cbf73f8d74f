"""
Local Frobenius matrices, local zeta denominators and excluded primes
"""
import logging
from typing import List, Union

from ..exact.roots import RootOfUnity
from ..linalg.matrix import IntMatrix, char_poly
from ..utils.errors import DomainError
from ..utils.primes import primes_up_to, require_prime
from .models import Coefficient, ExcludedPrimes, LocalFactor, LocalFrobenius

logger = logging.getLogger(__name__)


def as_coefficient(value: Union[int, RootOfUnity]) -> Coefficient:
    """Real roots of unity collapse to +1 or -1"""
    if isinstance(value, RootOfUnity):
        real = value.as_int()
        return value.canonical() if real is None else real
    return value


def build_lp(A: IntMatrix, p: int) -> LocalFrobenius:
    """
    L_p for the matrix A: with char(A^p) = x^(n+1) + c_1 x^n + ... the first
    row is (a_1, ..., a_n, p) where a_i = (-1)^i c_i, so a_1 = tr(A^p).
    """
    require_prime(p)
    size = A.require_square()
    if abs(A.det()) != 1:
        raise DomainError(f"|det A| must be 1, got {abs(A.det())}")
    n = size - 1
    if n == 0:
        raise DomainError("a 1x1 matrix gives the root of unity case; use build_lp_root")
    # coeffs are lowest first: c_i multiplies x^(n+1-i)
    coeffs = char_poly(A ** p).coeffs
    a = [(-1) ** i * coeffs[size - i] for i in range(1, n + 1)]
    rows = [[0] * size for _ in range(size)]
    rows[0] = a + [p]
    for i in range(1, size):
        rows[i][i - 1] = -1
    return LocalFrobenius(p=p, n=n, matrix=IntMatrix.of(rows))


def build_lp_root(N: int, p: int) -> LocalFrobenius:
    """n = 0: the 1x1 entry zeta_N^p"""
    require_prime(p)
    return LocalFrobenius(p=p, n=0, root=RootOfUnity(N, 1) ** p)


def det_one_minus_zl(L: IntMatrix) -> List[int]:
    """
    Coefficients of det(I - L z), lowest first: sum_j (-1)^j r_j z^j where
    r_j is the sum of the principal j x j minors, read off char(L).
    """
    size = L.require_square()
    coeffs = char_poly(L).coeffs
    # char(L) = sum_j (-1)^j r_j x^(size-j)
    return [coeffs[size - j] for j in range(size + 1)]


def local_zeta(lp: LocalFrobenius) -> LocalFactor:
    """Denominator det(I - L_p z) of the local zeta factor"""
    if lp.n == 0:
        return LocalFactor(p=lp.p, coefficients=[1, as_coefficient(-lp.root)])
    return LocalFactor(p=lp.p, coefficients=det_one_minus_zl(lp.matrix))


def excluded_primes(A: IntMatrix, bound: int) -> ExcludedPrimes:
    """Primes p <= bound dividing tr(A)^2 - (n+1)^2"""
    size = A.require_square()
    value = A.trace() ** 2 - size ** 2
    if value == 0:
        logger.warning("tr(A)^2 = %d^2: every prime is excluded", size)
        return ExcludedPrimes(all_excluded=True)
    return ExcludedPrimes(primes=[p for p in primes_up_to(bound) if value % p == 0])
