"""
Pydantic records for the endomorphism-level functor
"""
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..exact.quadint import QuadInt
from ..linalg.matrix import IntMatrix

Side = Literal["complex", "real"]


class EndoMatrix(BaseModel):
    """2x2 integer matrix of an endomorphism, tagged by the side it lives on"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    m: IntMatrix = Field(description="Matrix of the endomorphism")
    side: Side = Field(default="complex", description="complex: End of a CM curve; real: End of an RM torus")

    @model_validator(mode="after")
    def _check(self) -> "EndoMatrix":
        if self.m.shape != (2, 2):
            raise ValueError("endomorphism matrix must be 2x2")
        if self.m.det() == 0:
            raise ValueError("endomorphism matrix has zero determinant")
        return self


class FunctorChain(BaseModel):
    """Every stage of normalize, transpose, then the functor"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    source: IntMatrix = Field(description="Input matrix (a, 1; c, d)")
    normalized: IntMatrix = Field(description="(a + d, 1; c - ad, 0)")
    conjugator: IntMatrix = Field(description="S with S^-1 * source * S = normalized")
    transposed: IntMatrix = Field(description="(a + d, c - ad; 1, 0)")
    image: IntMatrix = Field(description="Real-side image (a + d, c - ad; -1, 0)")
    omega: Optional[QuadInt] = Field(
        default=None, description="Real quadratic integer acting on the pseudo-lattice, when irrational"
    )


class UnitIndexData(BaseModel):
    """Least exponent g with epsilon^g in Z + (n*theta)Z"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    epsilon: QuadInt = Field(description="Fundamental unit")
    n: int = Field(description="Index of the sublattice Z + (n*theta)Z")
    g: int = Field(description="Minimal exponent")
