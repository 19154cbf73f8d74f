"""
Pydantic records for local factors, characters and Euler products
"""
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from ..exact.roots import RootOfUnity
from ..linalg.matrix import IntMatrix

Coefficient = Union[int, RootOfUnity]


class LocalFrobenius(BaseModel):
    """The matrix L_p: first row (a_1, ..., a_n, p), subdiagonal -1; a root of unity when n = 0"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    p: int = Field(description="Prime")
    n: int = Field(description="Half-dimension of the torus; 0 for the degenerate case")
    matrix: Optional[IntMatrix] = Field(default=None, description="(n+1)x(n+1) matrix for n >= 1")
    root: Optional[RootOfUnity] = Field(default=None, description="The 1x1 entry for n = 0")


class LocalFactor(BaseModel):
    """Denominator det(I - L_p z) of a local zeta factor, lowest degree first"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    p: int = Field(description="Prime")
    coefficients: List[Coefficient] = Field(description="Coefficients of z^0, z^1, ...; constant term 1")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coefficients)

    def integer_coefficients(self) -> List[int]:
        """Coefficients as ints; real roots of unity become +1 or -1"""
        out = []
        for c in self.coefficients:
            if isinstance(c, RootOfUnity):
                value = c.as_int()
                if value is None:
                    raise ValueError(f"coefficient {c} is not real")
                out.append(value)
            else:
                out.append(c)
        return out

    def labels(self) -> List[str]:
        return [str(c) for c in self.coefficients]


class DirichletCharacter(BaseModel):
    """Character of (Z/NZ)^x given by exponents on a fixed generator set"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    N: int = Field(description="Modulus")
    index: int = Field(description="Position in the enumerated group; 0 is trivial")
    generators: List[int] = Field(default_factory=list, description="Generators of (Z/NZ)^x")
    orders: List[int] = Field(default_factory=list, description="Orders of the generators")
    exponents: List[int] = Field(default_factory=list, description="chi(g_i) = zeta_(order_i)^(exponent_i)")
    values: Dict[int, RootOfUnity] = Field(description="Table on units mod N")

    def __call__(self, a: int) -> Union[int, RootOfUnity]:
        """chi(a); 0 when gcd(a, N) > 1"""
        if self.N == 1:
            return RootOfUnity(1, 0)
        return self.values.get(a % self.N, 0)

    @property
    def is_trivial(self) -> bool:
        return all(e == 0 for e in self.exponents)

    @property
    def is_real(self) -> bool:
        return all(v.as_int() is not None for v in self.values.values())


class ExcludedPrimes(BaseModel):
    """Primes dividing tr(A)^2 - (n+1)^2, or every prime when it vanishes"""
    all_excluded: bool = Field(default=False, description="tr(A)^2 = (n+1)^2")
    primes: List[int] = Field(default_factory=list, description="Excluded primes up to the bound")

    def __contains__(self, p: int) -> bool:
        return self.all_excluded or p in self.primes


class EulerEval(BaseModel):
    """Partial Euler product value"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    s: Any = Field(description="Evaluation point")
    prime_bound: int = Field(description="Largest prime considered")
    value: Any = Field(description="mpmath complex value")
    excluded: List[int] = Field(default_factory=list, description="Primes left out of the product")
    precision: int = Field(description="Bits of the final rounding")
    factors: int = Field(default=0, description="Number of local factors multiplied")


class ArtinPair(BaseModel):
    """Diagonal 2x2 representation diag(v, conj v) and its local factor"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    representation: List[List[Any]] = Field(description="diag(v, conj(v))")
    determinant_term: Any = Field(description="det(I - rep * p^-s)")
    factor: Any = Field(description="Reciprocal of determinant_term")
    product_of_factors: Any = Field(description="(1 - v p^-s)^-1 (1 - conj(v) p^-s)^-1")


class CompareRow(BaseModel):
    """One prime of the curve/torus comparison"""
    p: int = Field(description="Prime")
    ap: int = Field(description="Frobenius trace of the curve")
    trAp: int = Field(description="Trace of A^p")
    curve_factor: List[int] = Field(description="1 - a_p z + p z^2 coefficients")
    torus_factor: List[int] = Field(description="1 - tr(A^p) z + p z^2 coefficients")
    excluded: bool = Field(description="p is an excluded prime for A")
    equal: bool = Field(description="a_p == tr(A^p)")
