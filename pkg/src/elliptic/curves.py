"""
Reduction, point counting and Hasse-Weil local factors of CM curves
"""
import logging
from typing import Iterable, List, Optional

import numpy as np
from pydantic import ValidationError

from ..lfunc.models import LocalFactor
from ..utils.config import config
from ..utils.errors import BadReductionError, DomainError, UsageError
from ..utils.primes import require_prime
from .models import ApRecord, CurveModel

logger = logging.getLogger(__name__)


def make_curve(a4: int, a6: int, cm_discriminant: Optional[int] = None, label: Optional[str] = None) -> CurveModel:
    """CurveModel, turning validation failures into DomainError"""
    try:
        return CurveModel(a4=a4, a6=a6, cm_discriminant=cm_discriminant, label=label)
    except ValidationError as e:
        raise DomainError(e.errors()[0]["msg"]) from e


def parse_curve(text: str) -> CurveModel:
    """Parse "a4,a6" (an optional third field is the CM discriminant)"""
    parts = [part.strip() for part in text.split(",")]
    if len(parts) not in (2, 3):
        raise UsageError(f"expected 'a4,a6', got {text!r}")
    try:
        values = [int(part) for part in parts]
    except ValueError as e:
        raise UsageError(f"non-integer coefficient in {text!r}") from e
    return make_curve(*values)


def good_reduction(curve: CurveModel, p: int) -> bool:
    """p > 3 and p does not divide the discriminant"""
    require_prime(p)
    return p > 3 and curve.discriminant % p != 0


def legendre_symbol(a: int, p: int) -> int:
    """(a/p) for an odd prime p by Euler's criterion"""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def legendre_table(p: int) -> np.ndarray:
    """(r/p) for r = 0..p-1, from the table of squares"""
    y = np.arange(p, dtype=np.int64)
    roots = np.zeros(p, dtype=np.int64)
    np.add.at(roots, (y * y) % p, 1)
    # residue r has 1 + (r/p) square roots
    return roots - 1


def _rhs(curve: CurveModel, p: int) -> np.ndarray:
    x = np.arange(p, dtype=np.int64)
    x2 = (x * x) % p
    return (x2 * x + (curve.a4 % p) * x + curve.a6 % p) % p


def count_points(curve: CurveModel, p: int) -> ApRecord:
    """#E(F_p) = 1 + sum over x of (1 + legendre(x^3 + a4 x + a6))"""
    if not good_reduction(curve, p):
        raise BadReductionError(f"{curve.equation()} has bad reduction at {p}")
    table = legendre_table(p)
    count = 1 + p + int(table[_rhs(curve, p)].sum())
    ap = p + 1 - count
    if ap * ap > 4 * p:
        raise AssertionError(f"Hasse bound violated at p = {p}: a_p = {ap}")
    return ApRecord(p=p, count=count, ap=ap)


def count_points_naive(curve: CurveModel, p: int) -> int:
    """#E(F_p) by trying every pair (x, y)"""
    count = 1
    for x in range(p):
        rhs = (x ** 3 + curve.a4 * x + curve.a6) % p
        for y in range(p):
            if (y * y - rhs) % p == 0:
                count += 1
    return count


def curve_local_factor(curve: CurveModel, p: int) -> LocalFactor:
    """Denominator 1 - a_p z + p z^2"""
    ap = count_points(curve, p).ap
    return LocalFactor(p=p, coefficients=[1, -ap, p])


def _configured(entries: Iterable[str]) -> List[CurveModel]:
    curves = []
    for entry in entries:
        parts = [part.strip() for part in entry.split(",")]
        if len(parts) != 3:
            raise UsageError(f"catalog entry must be 'a4,a6,D', got {entry!r}")
        curve = parse_curve(entry)
        curves.append(curve.model_copy(update={"label": f"config:{entry}"}))
    return curves


def cm_catalog(extra: Optional[Iterable[str]] = None) -> List[CurveModel]:
    """Built-in CM curves followed by the configured ones"""
    builtin = [
        make_curve(-1, 0, -4, "y^2 = x^3 - x"),
        make_curve(0, 1, -3, "y^2 = x^3 + 1"),
    ]
    extra = config.cm_curves if extra is None else extra
    added = _configured(extra)
    if added:
        logger.debug("catalog extended by %d configured curves", len(added))
    return builtin + added
