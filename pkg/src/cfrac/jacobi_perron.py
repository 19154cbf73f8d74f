"""
Jacobi-Perron multidimensional continued fractions

The iteration runs on certified mpmath intervals. A repeated state is only
a period candidate: nothing here proves periodicity.
"""
import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from mpmath import iv, mp

from ..exact.quadint import QuadInt, iv_bounds, iv_overlap, iv_precision
from ..exact.reals import to_interval
from ..linalg.matrix import IntMatrix
from ..utils.errors import DegenerateInputError, DomainError, PrecisionExhaustedError
from .models import JpState

logger = logging.getLogger(__name__)


def _as_fraction(value) -> Optional[Fraction]:
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, QuadInt) and value.is_rational:
        return value.as_fraction()
    return None


def _certified_floor(x) -> int:
    lo, hi = iv_bounds(x)
    a, b = int(mp.floor(lo)), int(mp.floor(hi))
    if a != b:
        raise PrecisionExhaustedError(f"floor of {x} is not determined at this precision")
    return a


def _rational_iteration(alpha: List[Fraction], max_iters: int) -> None:
    """Exact run for rational input; it always terminates in a zero fractional part"""
    for _ in range(max_iters):
        digits = [a.numerator // a.denominator for a in alpha]
        beta = alpha[0] - digits[0]
        if beta == 0:
            raise DegenerateInputError("fractional part is exactly zero (rational input)")
        alpha = [(x - a) / beta for x, a in zip(alpha[1:], digits[1:])] + [1 / beta]


def _close(x, y, tol) -> bool:
    if iv_overlap(x, y):
        return True
    xa, xb = iv_bounds(x)
    ya, yb = iv_bounds(y)
    return max(ya - xb, xa - yb) < tol


def jacobi_perron(theta: Sequence, max_iters: int = 100, precision: int = 256) -> JpState:
    """
    Run alpha -> ((alpha_2 - a_2)/b, ..., (alpha_n - a_n)/b, 1/b) with
    a_i = floor(alpha_i) and b = alpha_1 - a_1, stopping at the first
    state that revisits an earlier one within the certified precision.
    """
    n = len(theta)
    if n < 1:
        raise DomainError("need at least one coordinate")
    if precision < 64:
        raise DomainError("precision must be at least 64 bits")
    exact = [_as_fraction(t) for t in theta]
    if all(e is not None for e in exact):
        if any(e <= 0 for e in exact):
            raise DomainError("entries must be positive")
        _rational_iteration(exact, max_iters)
    with iv_precision(precision), mp.workprec(precision):
        alpha = [to_interval(t, precision) for t in theta]
        if any(iv_bounds(a)[0] <= 0 for a in alpha):
            raise DomainError("entries must be positive")
        tol = mp.mpf(2) ** (-(precision // 3))
        states = [alpha]
        digits: List[List[int]] = []
        candidate: Optional[Tuple[int, int]] = None
        for _ in range(max_iters):
            a = [_certified_floor(x) for x in alpha]
            beta = alpha[0] - a[0]
            lo, hi = iv_bounds(beta)
            if lo <= 0:
                if hi <= 0:
                    raise DegenerateInputError("fractional part is exactly zero")
                raise PrecisionExhaustedError("fractional part interval contains 0")
            alpha = [(x - ai) / beta for x, ai in zip(alpha[1:], a[1:])] + [1 / beta]
            digits.append(a)
            k = len(states)
            for j in range(k):
                if all(_close(x, y, tol) for x, y in zip(states[j], alpha)):
                    candidate = (j, k - j)
                    break
            states.append(alpha)
            if candidate is not None:
                logger.debug("Jacobi-Perron period candidate %s after %d steps", candidate, k)
                break
        return JpState(
            digits=digits,
            vector=alpha,
            states=states,
            period_candidate=candidate,
            precision=precision,
        )


def digit_matrix(a: Sequence[int]) -> IntMatrix:
    """
    (n+1)x(n+1) matrix M with (alpha, 1) proportional to M (alpha', 1) for
    one step with digits a = (a_1, ..., a_n)
    """
    n = len(a)
    rows = [[0] * (n + 1) for _ in range(n + 1)]
    rows[0][n - 1] = a[0]
    rows[0][n] = 1
    for i in range(1, n):
        rows[i][n - 1] = a[i]
        rows[i][i - 1] = 1
    rows[n][n - 1] = 1
    return IntMatrix.of(rows)


def period_product(state: JpState) -> IntMatrix:
    """Product of the digit matrices over the candidate period, left to right"""
    if state.period_candidate is None:
        raise DomainError("no period candidate")
    start, length = state.period_candidate
    window = state.digits[start:start + length]
    if not window:
        raise DomainError("empty period")
    M = digit_matrix(window[0])
    for a in window[1:]:
        M = M * digit_matrix(a)
    return M
