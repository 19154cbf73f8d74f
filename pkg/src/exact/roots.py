"""
Exact roots of unity exp(2*pi*i*k/N)
"""
from dataclasses import dataclass
from math import gcd
from typing import Optional, Tuple

from mpmath import mp

from ..utils.errors import DomainError


@dataclass(frozen=True, eq=False)
class RootOfUnity:
    """zeta_N^k kept as an exponent pair with 0 <= k < N"""
    N: int
    k: int = 1

    def __post_init__(self):
        if self.N < 1:
            raise DomainError(f"order must be >= 1, got {self.N}")
        object.__setattr__(self, "k", self.k % self.N)

    def reduced(self) -> Tuple[int, int]:
        """(order, exponent) in lowest terms"""
        g = gcd(self.k, self.N)
        return self.N // g, self.k // g

    @property
    def order(self) -> int:
        return self.reduced()[0]

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        if other.N == self.N:
            return RootOfUnity(self.N, self.k + other.k)
        L = self.N * other.N // gcd(self.N, other.N)
        return RootOfUnity(L, self.k * (L // self.N) + other.k * (L // other.N))

    def __pow__(self, e: int) -> "RootOfUnity":
        return RootOfUnity(self.N, self.k * e)

    def conjugate(self) -> "RootOfUnity":
        return RootOfUnity(self.N, -self.k)

    def __neg__(self) -> "RootOfUnity":
        # -zeta_N^k = zeta_2N^(2k+N)
        N, k = self.reduced()
        return RootOfUnity(2 * N, 2 * k + N).canonical()

    def canonical(self) -> "RootOfUnity":
        N, k = self.reduced()
        return RootOfUnity(N, k)

    def as_int(self) -> Optional[int]:
        """1 or -1 when the value is real, else None"""
        N, k = self.reduced()
        if N == 1:
            return 1
        if N == 2:
            return -1
        return None

    def value(self, precision: int = 128):
        """
        Complex value with an absolute error bound.

        Returns (z, bound) with |z - exp(2*pi*i*k/N)| < bound = 2^-precision.
        """
        if precision < 32:
            raise DomainError("precision must be at least 32 bits")
        N, k = self.reduced()
        with mp.workprec(precision + 20):
            bound = mp.mpf(2) ** (-precision)
            if N in (1, 2, 4):
                z = {(1, 0): mp.mpc(1, 0), (2, 1): mp.mpc(-1, 0),
                     (4, 1): mp.mpc(0, 1), (4, 3): mp.mpc(0, -1)}[(N, k)]
            else:
                z = mp.expjpi(mp.mpf(2 * k) / N)
            return z, bound

    def __eq__(self, other):
        if isinstance(other, int):
            return self.as_int() == other
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        return self.reduced() == other.reduced()

    def __hash__(self):
        return hash(self.reduced())

    def __repr__(self):
        return f"RootOfUnity(N={self.N}, k={self.k})"

    def __str__(self):
        value = self.as_int()
        if value is not None:
            return str(value)
        N, k = self.reduced()
        if N == 4:
            return "i" if k == 1 else "-i"
        return f"zeta_{N}^{k}"


def root_of_unity_value(z: RootOfUnity, precision: int = 128):
    return z.value(precision)
