"""
Perron-Frobenius eigendata of positive integer matrices

Two by two matrices get exact quadratic eigendata. Larger matrices get
certified interval enclosures: Collatz-Wielandt bounds for the eigenvalue
and a Birkhoff contraction bound in the Hilbert metric for the vector.
"""
import logging
from fractions import Fraction
from itertools import product
from typing import List, Literal

from mpmath import iv, mp
from sympy import Poly, Symbol, factor_list

from ..exact.quadint import QuadInt, iv_bounds, iv_overlap, iv_precision
from ..utils.errors import DomainError, PrecisionExhaustedError
from .fieldops import null_vector
from .matrix import IntMatrix, char_poly
from .models import PFData

logger = logging.getLogger(__name__)

Mode = Literal["auto", "exact", "interval"]

START_PRECISION = 256
MAX_PRECISION = 4096


def perron_frobenius(A: IntMatrix, mode: Mode = "auto", precision: int = START_PRECISION) -> PFData:
    """Dominant eigenvalue and eigenvector (first coordinate 1) of a positive matrix"""
    n = A.require_square()
    if not A.is_positive():
        raise DomainError("Perron-Frobenius data needs strictly positive entries")
    if mode == "auto":
        mode = "exact" if n <= 2 else "interval"
    if mode == "exact":
        return _exact_2x2(A) if n <= 2 else _exact_quadratic(A)
    return _interval(A, precision)


def _exact_2x2(A: IntMatrix) -> PFData:
    if A.nrows == 1:
        lam = QuadInt.rational(A[0, 0])
        return PFData(eigenvalue=lam, vector=[QuadInt.rational(1)], exact=True)
    lam = QuadInt.from_quadratic(1, -A.trace(), A.det(), larger=True)
    v = [QuadInt.rational(1), (lam - A[0, 0]) / A[0, 1]]
    _check_exact(A, lam, v)
    return PFData(eigenvalue=lam, vector=v, exact=True)


def _check_exact(A: IntMatrix, lam: QuadInt, v: List[QuadInt]) -> None:
    for i, row in enumerate(A.rows):
        acc = QuadInt.rational(0)
        for a, x in zip(row, v):
            acc = acc + x * a
        if acc != lam * v[i]:
            raise AssertionError(f"A*v != lambda*v in row {i}")


def _exact_quadratic(A: IntMatrix) -> PFData:
    """Exact data for n >= 3 when the Perron root has degree <= 2"""
    enclosure = _interval(A, START_PRECISION)
    x = Symbol("x")
    poly = Poly(list(reversed(char_poly(A).coeffs)), x)
    for factor, _ in factor_list(poly.as_expr())[1]:
        f = Poly(factor, x)
        if f.degree() > 2:
            continue
        coeffs = [int(c) for c in f.all_coeffs()]
        if f.degree() == 1:
            candidates = [QuadInt.rational(Fraction(-coeffs[1], coeffs[0]))]
        elif coeffs[1] ** 2 - 4 * coeffs[0] * coeffs[2] < 0:
            continue
        else:
            candidates = [QuadInt.from_quadratic(*coeffs, larger=flag) for flag in (True, False)]
        for lam in candidates:
            if iv_overlap(lam.to_interval(START_PRECISION), enclosure.eigenvalue):
                rows = [
                    [QuadInt.rational(A[i, j]) - (lam if i == j else 0) for j in range(A.ncols)]
                    for i in range(A.nrows)
                ]
                kernel = null_vector(rows, one=QuadInt.rational(1), zero=QuadInt.rational(0))
                if kernel is None:
                    continue
                v = [k / kernel[0] for k in kernel]
                _check_exact(A, lam, v)
                return PFData(eigenvalue=lam, vector=v, exact=True)
    raise DomainError("dominant eigenvalue is not rational or quadratic; use interval mode")


def birkhoff_contraction(A: IntMatrix) -> Fraction:
    """theta = max a_ij a_kl / (a_il a_kj); the contraction is (sqrt(theta)-1)/(sqrt(theta)+1)"""
    n = A.nrows
    best = Fraction(1)
    for i, j, k, l in product(range(n), repeat=4):
        ratio = Fraction(A[i, j] * A[k, l], A[i, l] * A[k, j])
        if ratio > best:
            best = ratio
    return best


def _interval(A: IntMatrix, precision: int) -> PFData:
    prec = max(precision, 64)
    while prec <= MAX_PRECISION:
        try:
            return _interval_attempt(A, prec)
        except PrecisionExhaustedError:
            logger.debug("Perron-Frobenius certification failed at %d bits", prec)
            prec *= 2
    raise PrecisionExhaustedError(f"could not certify Perron-Frobenius data below {MAX_PRECISION} bits")


def _power_iteration(A: IntMatrix, prec: int, max_iters: int = 20000) -> List:
    with mp.workprec(prec + 32):
        tol = mp.mpf(2) ** (-prec)
        v = [mp.mpf(1)] * A.nrows
        for _ in range(max_iters):
            w = [mp.fsum(a * x for a, x in zip(row, v)) for row in A.rows]
            w = [x / w[0] for x in w]
            if max(abs(x - y) for x, y in zip(v, w)) < tol:
                return w
            v = w
        return v


def _interval_attempt(A: IntMatrix, prec: int) -> PFData:
    v = _power_iteration(A, prec)
    theta = birkhoff_contraction(A)
    target = mp.mpf(2) ** (-(prec // 2))
    with iv_precision(prec):
        vi = [iv.mpf(x) for x in v]
        w = []
        for row in A.rows:
            acc = iv.mpf(0)
            for a, x in zip(row, vi):
                acc += a * x
            w.append(acc)
        ratios = [wi / xi for wi, xi in zip(w, vi)]
        lo = min(iv_bounds(r)[0] for r in ratios)
        hi = max(iv_bounds(r)[1] for r in ratios)
        eigenvalue = iv.mpf([lo, hi])
        root = iv.sqrt(iv.mpf(theta.numerator) / theta.denominator)
        tau = (root - 1) / (root + 1)
        if not tau < 1:
            raise PrecisionExhaustedError("contraction coefficient not certified below 1")
        # Hilbert distance between v and A v bounds the distance to the fixed ray
        step = iv.log(iv.mpf(hi) / iv.mpf(lo))
        delta = iv_bounds(step / (1 - tau))[1]
        if hi - lo > target * hi or delta > target:
            raise PrecisionExhaustedError(f"enclosure too wide at {prec} bits")
        spread = iv.exp(iv.mpf([-delta, delta]))
        vector = [iv.mpf(1)] + [x * spread for x in vi[1:]]
        return PFData(eigenvalue=eigenvalue, vector=vector, exact=False, precision=prec)
