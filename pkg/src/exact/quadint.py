"""
Exact elements (a + b*sqrt(D))/c of a real quadratic field
"""
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Tuple, Union

from mpmath import iv, mp
from sympy import factorint

from ..utils.errors import DomainError, MixedFieldError, UsageError
from .poly import IntPoly

Number = Union[int, Fraction, "QuadInt"]

# D attached to rational values that never met an irrational one
RATIONAL_D = 2


@lru_cache(maxsize=4096)
def squarefree_decomposition(n: int) -> Tuple[int, int]:
    """Write n >= 1 as f^2 * D with D square-free; returns (f, D)"""
    if n < 1:
        raise DomainError(f"squarefree decomposition needs n >= 1, got {n}")
    f, d = 1, 1
    for prime, exp in factorint(n).items():
        f *= prime ** (exp // 2)
        if exp % 2:
            d *= prime
    return f, d


@dataclass(frozen=True, eq=False)
class QuadInt:
    """
    The number (a + b*sqrt(D))/c with gcd(a, b, c) = 1, c > 0 and D > 1
    square-free.

    A value with b = 0 is rational; it keeps a D for bookkeeping but mixes
    freely with values of any field.
    """
    a: int
    b: int
    c: int
    D: int = RATIONAL_D

    def __post_init__(self):
        a, b, c, D = self.a, self.b, self.c, self.D
        if c == 0:
            raise ZeroDivisionError("QuadInt denominator is zero")
        if b != 0:
            if D < 2:
                raise DomainError(f"D must be > 1 for an irrational value, got {D}")
            f, D = squarefree_decomposition(D)
            if D == 1:
                a, b, D = a + b * f, 0, RATIONAL_D
            else:
                b *= f
        elif D < 2:
            D = RATIONAL_D
        else:
            D = squarefree_decomposition(D)[1]
            if D == 1:
                D = RATIONAL_D
        if c < 0:
            a, b, c = -a, -b, -c
        g = gcd(gcd(a, b), c)
        if g > 1:
            a, b, c = a // g, b // g, c // g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "D", D)

    # -- construction -----------------------------------------------------

    @classmethod
    def rational(cls, value: Union[int, Fraction], D: int = RATIONAL_D) -> "QuadInt":
        value = Fraction(value)
        return cls(value.numerator, 0, value.denominator, D)

    @classmethod
    def sqrt(cls, D: int) -> "QuadInt":
        return cls(0, 1, 1, D)

    @classmethod
    def from_quadratic(cls, A: int, B: int, C: int, larger: bool = True) -> "QuadInt":
        """A root of A x^2 + B x + C (A != 0, real roots); the larger one by default"""
        if A == 0:
            raise DomainError("leading coefficient must be nonzero")
        disc = B * B - 4 * A * C
        if disc < 0:
            raise DomainError("quadratic has no real roots")
        sign = 1 if larger else -1
        if A < 0:
            sign = -sign
        if disc == 0:
            return cls.rational(Fraction(-B, 2 * A))
        f, D = squarefree_decomposition(disc)
        if D == 1:
            return cls.rational(Fraction(-B + sign * f, 2 * A))
        return cls(-B, sign * f, 2 * A, D)

    @classmethod
    def parse(cls, text: str) -> "QuadInt":
        """
        Parse the shared grammar: quad:a,b,c,D | sqrt:D | int:n
        """
        text = text.strip()
        kind, sep, body = text.partition(":")
        if not sep:
            raise UsageError(f"expected quad:, sqrt: or int:, got {text!r}")
        try:
            parts = [int(part) for part in body.split(",")]
        except ValueError as e:
            raise UsageError(f"non-integer field in {text!r}") from e
        if kind == "quad" and len(parts) == 4:
            a, b, c, D = parts
            if c == 0:
                raise UsageError("denominator must be nonzero")
            if b != 0 and D < 2:
                raise UsageError("D must be > 1")
            return cls(a, b, c, D)
        if kind == "sqrt" and len(parts) == 1:
            if parts[0] < 2:
                raise UsageError("sqrt:D needs D > 1")
            return cls.sqrt(parts[0])
        if kind == "int" and len(parts) == 1:
            return cls(parts[0], 0, 1, RATIONAL_D)
        raise UsageError(f"cannot parse quadratic number {text!r}")

    def format(self) -> str:
        return f"quad:{self.a},{self.b},{self.c},{self.D}"

    # -- predicates and parts -------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if self.b:
            raise DomainError(f"{self} is irrational")
        return Fraction(self.a, self.c)

    def conjugate(self) -> "QuadInt":
        return QuadInt(self.a, -self.b, self.c, self.D)

    def trace_norm(self) -> Tuple[Fraction, Fraction]:
        """(q + conj(q), q * conj(q)) as rationals"""
        return (
            Fraction(2 * self.a, self.c),
            Fraction(self.a * self.a - self.b * self.b * self.D, self.c * self.c),
        )

    @property
    def trace(self) -> Fraction:
        return self.trace_norm()[0]

    @property
    def norm(self) -> Fraction:
        return self.trace_norm()[1]

    def minimal_polynomial(self) -> IntPoly:
        """Primitive integer polynomial of degree <= 2 vanishing at self"""
        if self.b == 0:
            return IntPoly((-self.a, self.c)).primitive()
        c2 = self.c * self.c
        return IntPoly((self.a * self.a - self.b * self.b * self.D, -2 * self.a * self.c, c2)).primitive()

    def in_basis(self, theta: "QuadInt") -> Tuple[Fraction, Fraction]:
        """Rational (s, t) with self = s + t*theta; theta must be irrational"""
        if theta.b == 0:
            raise DomainError("basis element must be irrational")
        self._field(theta)
        t = Fraction(self.b, self.c) / Fraction(theta.b, theta.c)
        s = Fraction(self.a, self.c) - t * Fraction(theta.a, theta.c)
        return s, t

    # -- arithmetic -------------------------------------------------------

    def _field(self, other: "QuadInt") -> int:
        if self.b == 0:
            return other.D
        if other.b == 0 or other.D == self.D:
            return self.D
        raise MixedFieldError(f"cannot combine Q(sqrt({self.D})) with Q(sqrt({other.D}))")

    def _coerce(self, other) -> "QuadInt":
        if isinstance(other, QuadInt):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadInt.rational(other, self.D)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        D = self._field(other)
        return QuadInt(
            self.a * other.c + other.a * self.c,
            self.b * other.c + other.b * self.c,
            self.c * other.c,
            D,
        )

    __radd__ = __add__

    def __neg__(self):
        return QuadInt(-self.a, -self.b, self.c, self.D)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        D = self._field(other)
        return QuadInt(
            self.a * other.a + self.b * other.b * D,
            self.a * other.b + self.b * other.a,
            self.c * other.c,
            D,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadInt":
        n = self.a * self.a - self.b * self.b * self.D
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadInt(self.c * self.a, -self.c * self.b, n, self.D)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = QuadInt(1, 0, 1, self.D)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- ordering ------------------------------------------------------------

    def sign(self) -> int:
        """Exact sign of the real value"""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a >= 0 and b > 0:
            return 1
        if a <= 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with b^2 D
        if a * a > b * b * self.D:
            return 1 if a > 0 else -1
        return 1 if b > 0 else -1

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and Fraction(self.a, self.c) == other
        if not isinstance(other, QuadInt):
            return NotImplemented
        if self.b == 0 and other.b == 0:
            return (self.a, self.c) == (other.a, other.c)
        return (self.a, self.b, self.c, self.D) == (other.a, other.b, other.c, other.D)

    def __hash__(self):
        if self.b == 0:
            return hash(Fraction(self.a, self.c))
        return hash((self.a, self.b, self.c, self.D))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def floor(self) -> int:
        if self.b == 0:
            return self.a // self.c
        r = isqrt(self.b * self.b * self.D)
        # b*sqrt(D) is irrational, so its floor is r or -r-1
        fy = r if self.b > 0 else -r - 1
        return (self.a + fy) // self.c

    # -- numeric views -------------------------------------------------------

    def to_mpf(self, prec: int = 128):
        with mp.workprec(prec + 16):
            value = (mp.mpf(self.a) + self.b * mp.sqrt(self.D)) / self.c
        with mp.workprec(prec):
            return +value

    def to_interval(self, prec: int = 128):
        """Certified enclosure at the given precision"""
        with iv_precision(prec):
            return (iv.mpf(self.a) + iv.mpf(self.b) * iv.sqrt(iv.mpf(self.D))) / iv.mpf(self.c)

    def __float__(self):
        return float(self.to_mpf(64))

    def __repr__(self):
        return f"QuadInt({self.a}, {self.b}, {self.c}, D={self.D})"

    def __str__(self):
        if self.b == 0:
            return str(self.a) if self.c == 1 else f"{self.a}/{self.c}"
        root = f"sqrt({self.D})"
        if abs(self.b) != 1:
            root = f"{abs(self.b)}*{root}"
        if self.a == 0:
            num = root if self.b > 0 else f"-{root}"
        else:
            num = f"{self.a}{'+' if self.b > 0 else '-'}{root}"
        if self.c == 1:
            return num
        if self.a == 0 and self.b > 0 and abs(self.b) == 1:
            return f"{num}/{self.c}"
        return f"({num})/{self.c}"


@contextmanager
def iv_precision(prec: int):
    """Temporarily set mpmath's interval precision"""
    saved = iv.prec
    iv.prec = prec
    try:
        yield iv
    finally:
        iv.prec = saved


def iv_bounds(x) -> Tuple:
    """Endpoints of an mpmath interval as exact mpf values"""
    lo, hi = x._mpi_
    return mp.make_mpf(lo), mp.make_mpf(hi)


def iv_overlap(x, y) -> bool:
    xa, xb = iv_bounds(x)
    ya, yb = iv_bounds(y)
    return xa <= yb and ya <= xb
