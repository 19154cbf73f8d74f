"""
Pydantic records for continued-fraction data
"""
from typing import Any, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..exact.quadint import QuadInt


class CfExpansion(BaseModel):
    """Eventually periodic simple continued fraction"""
    preperiod: List[int] = Field(default_factory=list, description="Digits before the period")
    period: List[int] = Field(description="Minimal repeating block")

    def digits(self, count: int) -> List[int]:
        """The first count digits of the infinite expansion"""
        out = list(self.preperiod[:count])
        while len(out) < count:
            out.extend(self.period)
        return out[:count]


class UnitData(BaseModel):
    """Fundamental unit of the multiplier ring of Z + Z*theta"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    epsilon: QuadInt = Field(description="Fundamental unit > 1")
    order_index: int = Field(description="Conductor f of the order in the maximal order")
    discriminant: int = Field(description="Discriminant of the order")
    norm: int = Field(description="Norm of epsilon, +1 or -1")


class JpState(BaseModel):
    """Jacobi-Perron iteration record; period detection is heuristic"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    digits: List[List[int]] = Field(default_factory=list, description="Digit vectors, one per step")
    vector: List[Any] = Field(default_factory=list, description="Current working vector as intervals")
    states: List[List[Any]] = Field(default_factory=list, description="Every visited working vector")
    period_candidate: Optional[Tuple[int, int]] = Field(
        default=None, description="(start, length) of a suspected period"
    )
    precision: int = Field(default=256, description="Working precision in bits")
    heuristic: bool = Field(default=True, description="Periodicity is numerically suspected, not proved")

    @property
    def dimension(self) -> int:
        return len(self.digits[0]) if self.digits else len(self.vector)
