"""
Pydantic records for short Weierstrass curves and their point counts
"""
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class CurveModel(BaseModel):
    """The curve y^2 = x^3 + a4*x + a6 over Q"""
    model_config = ConfigDict(frozen=True)

    a4: int = Field(description="Coefficient of x")
    a6: int = Field(description="Constant term")
    cm_discriminant: Optional[int] = Field(default=None, description="Discriminant of the CM order, if tagged")
    label: Optional[str] = Field(default=None, description="Display name")

    @property
    def discriminant(self) -> int:
        return -16 * (4 * self.a4 ** 3 + 27 * self.a6 ** 2)

    @model_validator(mode="after")
    def _check(self) -> "CurveModel":
        if self.discriminant == 0:
            raise ValueError(f"y^2 = x^3 + {self.a4}x + {self.a6} is singular")
        if self.cm_discriminant is not None and (self.cm_discriminant >= 0 or self.cm_discriminant % 4 not in (0, 1)):
            raise ValueError(f"{self.cm_discriminant} is not an imaginary quadratic discriminant")
        return self

    def equation(self) -> str:
        return f"y^2 = x^3 + {self.a4}x + {self.a6}"


class ApRecord(BaseModel):
    """Point count over F_p and the Frobenius trace"""
    p: int = Field(description="Prime of good reduction")
    count: int = Field(description="#E(F_p), point at infinity included")
    ap: int = Field(description="p + 1 - count")
