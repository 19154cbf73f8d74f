"""
Partial Euler products and the L-functions built from them
"""
import logging
from typing import Dict, Iterable, Optional, Sequence, Tuple

from mpmath import mp

from ..exact.roots import RootOfUnity
from ..linalg.matrix import IntMatrix
from ..utils.errors import ConvergenceError, DomainError, ExcludedPrimesDegenerate
from ..utils.primes import primes_up_to
from .characters import dirichlet_local_factor
from .local import build_lp, build_lp_root, excluded_primes, local_zeta
from .models import DirichletCharacter, EulerEval, LocalFactor
from .sweep import run_sweep

logger = logging.getLogger(__name__)

GUARD_BITS = 64


def _coefficient_value(c, prec: int, cache: Dict[Tuple[int, int], object]):
    if isinstance(c, RootOfUnity):
        key = c.reduced()
        if key not in cache:
            cache[key] = c.value(prec)[0]
        return cache[key]
    return c


def euler_product(
    factors: Iterable[LocalFactor],
    s,
    prime_bound: int,
    excluded: Sequence[int] = (),
    precision: int = 128,
    growth: Optional[float] = None,
) -> EulerEval:
    """
    Product of 1/denominator(p^-s) over included p <= prime_bound, in
    ascending p, at precision plus guard bits with one final rounding.

    growth, when given, is the exponent bounding coefficient growth; the
    product must then satisfy Re(s) > 1 + growth.
    """
    skip = set(excluded)
    chosen = sorted((f for f in factors if f.p <= prime_bound and f.p not in skip), key=lambda f: f.p)
    work = precision + GUARD_BITS
    cache: Dict[Tuple[int, int], object] = {}
    with mp.workprec(work):
        s_value = mp.mpmathify(s)
        if growth is not None and mp.re(s_value) <= 1 + growth:
            raise ConvergenceError(f"Re(s) = {mp.nstr(mp.re(s_value), 10)} is not above {1 + growth}")
        value = mp.mpc(1)
        for factor in chosen:
            z = mp.power(factor.p, -s_value)
            den = mp.mpc(0)
            zk = mp.mpf(1)
            for c in factor.coefficients:
                den += _coefficient_value(c, work, cache) * zk
                zk *= z
            if den == 0:
                raise DomainError(f"denominator vanishes at p = {factor.p}")
            value /= den
    with mp.workprec(precision):
        value = +value
    return EulerEval(
        s=s_value,
        prime_bound=prime_bound,
        value=value,
        excluded=sorted(skip),
        precision=precision,
        factors=len(chosen),
    )


def torus_local_factors(A: IntMatrix, primes: Sequence[int], threads: int = 1):
    return run_sweep(primes, lambda p: local_zeta(build_lp(A, p)), threads)


def torus_l_function(A: IntMatrix, s, prime_bound: int, precision: int = 128, threads: int = 1) -> EulerEval:
    """
    Partial Euler product of det(I - L_p p^-s)^-1 over primes not dividing
    tr(A)^2 - (n+1)^2.
    """
    excluded = excluded_primes(A, prime_bound)
    if excluded.all_excluded:
        raise ExcludedPrimesDegenerate(
            f"tr(A)^2 = (n+1)^2 for A = {A.format()}: every prime is excluded"
        )
    primes = [p for p in primes_up_to(prime_bound) if p not in excluded]
    if abs(A.trace()) > A.nrows:
        logger.warning(
            "coefficients tr(A^p) grow exponentially; the partial product has no limit in s"
        )
    factors = torus_local_factors(A, primes, threads)
    return euler_product(factors, s, prime_bound, excluded.primes, precision)


def root_l_function(N: int, s, prime_bound: int, precision: int = 128) -> EulerEval:
    """Degenerate case: factors 1 - zeta_N^p z"""
    factors = [local_zeta(build_lp_root(N, p)) for p in primes_up_to(prime_bound)]
    return euler_product(factors, s, prime_bound, precision=precision, growth=0)


def dirichlet_l_function(
    chi: DirichletCharacter, s, prime_bound: int, precision: int = 128, threads: int = 1
) -> EulerEval:
    """Partial Euler product of (1 - chi(p) p^-s)^-1"""
    primes = primes_up_to(prime_bound)
    factors = run_sweep(primes, lambda p: dirichlet_local_factor(chi, p), threads)
    return euler_product(factors, s, prime_bound, precision=precision, growth=0)
