"""
Pydantic records for torus parameters
"""
from typing import Any, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..exact.reals import is_exact, to_mpf

RmStatus = Literal["yes", "no", "unknown"]


class NormalTorus(BaseModel):
    """Parameters (theta_1, ..., theta_n) of a torus in normal form"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    thetas: List[Any] = Field(description="Positive parameters, exact or numeric")

    @field_validator("thetas")
    @classmethod
    def _positive(cls, v: List[Any]) -> List[Any]:
        if not v:
            raise ValueError("need at least one parameter")
        for t in v:
            if to_mpf(t, 64) <= 0:
                raise ValueError(f"parameter {t} is not positive")
        return v

    @property
    def exact(self) -> List[bool]:
        return [is_exact(t) for t in self.thetas]

    @property
    def n(self) -> int:
        return len(self.thetas)


class NormalFormResult(BaseModel):
    """Normal form of a skew matrix with its orthogonal conjugator"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    torus: NormalTorus = Field(description="Recovered parameters, descending")
    conjugator: Any = Field(description="Orthogonal mpmath matrix Q with Q^t Theta Q = Theta_0")
    residual: Any = Field(description="Max entry of |Q^t Theta Q - Theta_0| plus |Q^t Q - I|")
    precision: int = Field(description="Working precision in bits")


class LatticeGenerator(BaseModel):
    """Formal product of the parameters indexed by a subset"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    subset: List[int] = Field(description="1-based indices in the product")
    label: str = Field(description="Printable product, '1' for the empty subset")
    value: Optional[Any] = Field(default=None, description="Exact value when computable")


class TraceLattice(BaseModel):
    """Generators of the trace lattice and, for exact input, a reduced basis"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    generators: List[LatticeGenerator] = Field(description="All 2^n subset products")
    reduced_basis: Optional[List[Any]] = Field(default=None, description="Z-basis of the span when exact")
    statement: Optional[str] = Field(default=None, description="Closed form when real multiplication holds")


class RealMultiplication(BaseModel):
    """Outcome of the real multiplication test"""
    status: RmStatus = Field(description="yes, no, or unknown for numeric parameters")
    orders: List[str] = Field(default_factory=list, description="Orders Z[theta_i] when status is yes")
    minimal_polynomials: List[Optional[str]] = Field(
        default_factory=list, description="Minimal polynomial per parameter, None when numeric"
    )
    description: str = Field(description="Human-readable endomorphism ring")
