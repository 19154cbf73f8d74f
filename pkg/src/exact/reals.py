"""
Real parameters that are not necessarily quadratic: the real-spec grammar
and conversion of mixed exact/numeric values to mpmath numbers
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from mpmath import iv, mp

from ..utils.errors import DomainError, UsageError
from .quadint import QuadInt, iv_precision


@dataclass(frozen=True)
class RealRoot:
    """The positive real m^(1/k)"""
    m: int
    k: int

    def __post_init__(self):
        if self.m <= 0 or self.k < 1:
            raise DomainError(f"root:{self.m},{self.k} needs m > 0 and k >= 1")

    def __str__(self):
        return f"{self.m}^(1/{self.k})"


@dataclass(frozen=True)
class NumericReal:
    """A decimal literal or named constant, evaluated on demand"""
    text: str

    def __str__(self):
        return self.text


RealValue = Union[QuadInt, Fraction, int, RealRoot, NumericReal]

_CONSTANTS = {"pi": lambda ctx: ctx.pi, "e": lambda ctx: ctx.e}


def parse_real(text: str) -> RealValue:
    """
    quad:/sqrt:/int: give exact quadratic values, frac:a,b a rational,
    root:m,k the real m^(1/k); pi, e and decimal literals are numeric.
    """
    text = text.strip()
    kind, sep, body = text.partition(":")
    if sep:
        if kind in ("quad", "sqrt", "int"):
            return QuadInt.parse(text)
        try:
            parts = [int(x) for x in body.split(",")]
        except ValueError as e:
            raise UsageError(f"non-integer field in {text!r}") from e
        if kind == "frac" and len(parts) == 2:
            if parts[1] == 0:
                raise UsageError("zero denominator")
            return Fraction(parts[0], parts[1])
        if kind == "root" and len(parts) == 2:
            try:
                return RealRoot(*parts)
            except DomainError as e:
                raise UsageError(str(e)) from e
        raise UsageError(f"cannot parse real value {text!r}")
    if text in _CONSTANTS:
        return NumericReal(text)
    try:
        float(text)
    except ValueError as e:
        raise UsageError(f"cannot parse real value {text!r}") from e
    return NumericReal(text)


def is_exact(value) -> bool:
    return isinstance(value, (QuadInt, Fraction, int))


def as_quadint(value) -> QuadInt:
    if isinstance(value, QuadInt):
        return value
    if isinstance(value, (int, Fraction)):
        return QuadInt.rational(value)
    raise DomainError(f"{value} is not an exact quadratic value")


def to_interval(value, prec: int):
    """Certified mpmath interval enclosing value"""
    with iv_precision(prec):
        if isinstance(value, QuadInt):
            return value.to_interval(prec)
        if isinstance(value, Fraction):
            return iv.mpf(value.numerator) / value.denominator
        if isinstance(value, int):
            return iv.mpf(value)
        if isinstance(value, RealRoot):
            if value.k == 1:
                return iv.mpf(value.m)
            return iv.exp(iv.log(iv.mpf(value.m)) / value.k)
        if isinstance(value, NumericReal):
            if value.text in _CONSTANTS:
                return +_CONSTANTS[value.text](iv)
            return iv.mpf(value.text)
        if hasattr(value, "_mpi_"):
            return +value
        if hasattr(value, "_mpf_"):
            return iv.mpf(value)
    raise DomainError(f"cannot convert {value!r} to an interval")


def to_mpf(value, prec: int):
    with mp.workprec(prec):
        if isinstance(value, QuadInt):
            return value.to_mpf(prec)
        if isinstance(value, Fraction):
            return mp.mpf(value.numerator) / value.denominator
        if isinstance(value, int):
            return mp.mpf(value)
        if isinstance(value, RealRoot):
            return mp.root(value.m, value.k)
        if isinstance(value, NumericReal):
            if value.text in _CONSTANTS:
                return +_CONSTANTS[value.text](mp)
            return mp.mpf(value.text)
        if hasattr(value, "_mpi_"):
            return mp.make_mpf(value._mpi_[0]) / 2 + mp.make_mpf(value._mpi_[1]) / 2
        if hasattr(value, "_mpf_"):
            return +value
    raise DomainError(f"cannot convert {value!r} to a real number")
