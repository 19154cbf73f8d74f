"""
Pydantic records for the linear algebra layer
"""
from typing import Any, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from .matrix import IntMatrix


class SnfResult(BaseModel):
    """Smith normal form with its unimodular transforms"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    U: IntMatrix = Field(description="Unimodular row transform")
    S: IntMatrix = Field(description="Diagonal form with d_i | d_(i+1)")
    V: IntMatrix = Field(description="Unimodular column transform")

    @property
    def diagonal(self) -> List[int]:
        return [self.S[i, i] for i in range(min(self.S.shape))]


class PFData(BaseModel):
    """Perron-Frobenius eigendata of a positive matrix"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    eigenvalue: Any = Field(description="QuadInt in exact mode, mpmath interval otherwise")
    vector: List[Any] = Field(description="Eigenvector normalized to first coordinate 1")
    exact: bool = Field(description="Whether eigenvalue and vector are exact field elements")
    precision: Optional[int] = Field(default=None, description="Bits used to certify interval data")
