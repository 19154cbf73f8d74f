"""
Side-by-side local factors of a CM curve and a torus matrix
"""
import logging
from typing import List

from ..elliptic.curves import count_points, good_reduction
from ..elliptic.models import CurveModel
from ..linalg.matrix import IntMatrix
from ..utils.primes import primes_up_to
from .local import build_lp, excluded_primes, local_zeta
from .models import CompareRow
from .sweep import run_sweep

logger = logging.getLogger(__name__)


def compare_report(A: IntMatrix, curve: CurveModel, prime_bound: int, threads: int = 1) -> List[CompareRow]:
    """
    One row per prime of good reduction up to prime_bound, ascending.

    Equality of a_p and tr(A^p) is reported, never asserted.
    """
    excluded = excluded_primes(A, max(prime_bound, 2))
    primes = [p for p in primes_up_to(prime_bound) if good_reduction(curve, p)]

    def row(p: int) -> CompareRow:
        ap = count_points(curve, p).ap
        torus = local_zeta(build_lp(A, p)).integer_coefficients()
        tr_ap = (A ** p).trace()
        return CompareRow(
            p=p,
            ap=ap,
            trAp=tr_ap,
            curve_factor=[1, -ap, p],
            torus_factor=torus,
            excluded=p in excluded,
            equal=ap == tr_ap,
        )

    rows = run_sweep(primes, row, threads)
    mismatches = sum(1 for r in rows if not r.equal)
    if mismatches:
        logger.info("a_p differs from tr(A^p) at %d of %d primes", mismatches, len(rows))
    return rows
