"""
Dirichlet characters from a generator decomposition of (Z/NZ)^x
"""
from functools import lru_cache
from itertools import product
from math import prod
from typing import Dict, List, Tuple

from sympy import factorint, primitive_root, totient
from sympy.ntheory.modular import crt

from ..exact.roots import RootOfUnity
from ..utils.errors import DomainError
from ..utils.primes import require_prime
from .local import as_coefficient
from .models import DirichletCharacter, LocalFactor


def _local_generators(p: int, e: int) -> List[Tuple[int, int]]:
    """(generator, order) pairs for (Z/p^e)^x"""
    q = p ** e
    if p != 2:
        return [(int(primitive_root(q)), q - q // p)]
    if e == 1:
        return []
    if e == 2:
        return [(3, 2)]
    return [(q - 1, 2), (5, q // 4)]


@lru_cache(maxsize=64)
def _structure(N: int) -> Tuple[Tuple[int, ...], Tuple[int, ...], Dict[int, Tuple[int, ...]]]:
    """Global generators, their orders, and the exponent vector of every unit"""
    factors = sorted(factorint(N).items())
    moduli = [p ** e for p, e in factors]
    generators, orders = [], []
    for idx, (p, e) in enumerate(factors):
        for g, order in _local_generators(p, e):
            residues = [g if j == idx else 1 for j in range(len(moduli))]
            lifted = int(crt(moduli, residues)[0]) % N if len(moduli) > 1 else g % N
            generators.append(lifted)
            orders.append(order)
    logs: Dict[int, Tuple[int, ...]] = {}
    for exps in product(*(range(o) for o in orders)):
        u = 1
        for g, k in zip(generators, exps):
            u = u * pow(g, k, N) % N
        logs[u % N] = exps
    if len(logs) != int(totient(N)):
        raise AssertionError(f"generator decomposition of (Z/{N})^x is incomplete")
    return tuple(generators), tuple(orders), logs


def dirichlet_character(N: int, index: int) -> DirichletCharacter:
    """The index-th character; exponent tuples in lexicographic order, 0 trivial"""
    if N < 1:
        raise DomainError(f"modulus must be >= 1, got {N}")
    if N == 1:
        if index != 0:
            raise DomainError("modulus 1 has only the trivial character")
        return DirichletCharacter(N=1, index=0, values={0: RootOfUnity(1, 0)})
    generators, orders, logs = _structure(N)
    count = prod(orders)
    if not 0 <= index < count:
        raise DomainError(f"character index must be in [0, {count}), got {index}")
    exponents = []
    rest = index
    for order in reversed(orders):
        rest, k = divmod(rest, order)
        exponents.append(k)
    exponents.reverse()
    values = {}
    for u, ks in logs.items():
        value = RootOfUnity(1, 0)
        for order, e, k in zip(orders, exponents, ks):
            value = value * RootOfUnity(order, e * k)
        values[u] = value.canonical()
    return DirichletCharacter(
        N=N,
        index=index,
        generators=list(generators),
        orders=list(orders),
        exponents=exponents,
        values=dict(sorted(values.items())),
    )


def dirichlet_character_group(N: int) -> List[DirichletCharacter]:
    """All phi(N) characters modulo N"""
    if N < 1:
        raise DomainError(f"modulus must be >= 1, got {N}")
    count = 1 if N == 1 else prod(_structure(N)[1])
    return [dirichlet_character(N, i) for i in range(count)]


def dirichlet_local_factor(chi: DirichletCharacter, p: int) -> LocalFactor:
    """1 - chi(p) z, or 1 when p divides the modulus"""
    require_prime(p)
    value = chi(p)
    if isinstance(value, int):
        return LocalFactor(p=p, coefficients=[1])
    return LocalFactor(p=p, coefficients=[1, as_coefficient(-value)])
