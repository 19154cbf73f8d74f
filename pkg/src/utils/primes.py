"""
Prime utilities shared by the sweeps
"""
from typing import List

import numpy as np
from sympy import isprime

from .errors import NotPrimeError


def primes_up_to(bound: int) -> List[int]:
    """Ascending primes p <= bound (sieve of Eratosthenes)"""
    if bound < 2:
        return []
    sieve = np.ones(bound + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, int(bound ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = False
    return [int(p) for p in np.flatnonzero(sieve)]


def require_prime(p: int) -> int:
    if not isinstance(p, int) or p < 2 or not isprime(p):
        raise NotPrimeError(f"{p} is not prime")
    return p
