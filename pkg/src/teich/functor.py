"""
The functor on endomorphism matrices, the real quadratic integer it
produces, and the unit projection
"""
import logging
from typing import Optional, Tuple

from pydantic import ValidationError

from ..exact.quadint import QuadInt
from ..linalg.matrix import IntMatrix
from ..linalg.normalize import normalize_endomorphism
from ..utils.errors import DegenerateInputError, DomainError, MixedFieldError, ShapeError
from .models import EndoMatrix, FunctorChain

logger = logging.getLogger(__name__)


def endo(m: IntMatrix, side: str = "complex") -> EndoMatrix:
    """Build an EndoMatrix, turning validation failures into DomainError"""
    try:
        return EndoMatrix(m=m, side=side)
    except ValidationError as e:
        raise DomainError(e.errors()[0]["msg"]) from e


def functor_on_endo(e: EndoMatrix) -> EndoMatrix:
    """(a, b; c, d) on the complex side maps to (a, b; -c, -d) on the real side"""
    if e.side != "complex":
        raise DomainError("the functor takes complex-side endomorphisms")
    (a, b), (c, d) = e.m.rows
    return endo(IntMatrix(((a, b), (-c, -d))), side="real")


def _normalized_entries(m: IntMatrix) -> Tuple[int, int]:
    if m.shape != (2, 2):
        raise ShapeError(f"expected a 2x2 matrix, got {m.nrows}x{m.ncols}")
    (t, n), (c, d) = m.rows
    if (c, d) != (-1, 0):
        raise ShapeError(f"expected the shape (t, n; -1, 0), got {m.format()}")
    return t, n


def real_quadratic_from_normalized(m: IntMatrix, theta: Optional[QuadInt] = None) -> QuadInt:
    """
    The root of larger absolute value of x^2 - t x + n for m = (t, n; -1, 0).

    This omega acts on Z + Z*theta by omega*l1 = t*l1 + n*l2, omega*l2 = -l1.
    """
    t, n = _normalized_entries(m)
    disc = t * t - 4 * n
    if disc <= 0:
        raise DomainError(f"x^2 - {t}x + {n} has no two real roots")
    if t == 0:
        raise DegenerateInputError("roots have equal absolute value")
    omega = QuadInt.from_quadratic(1, -t, n, larger=t > 0)
    if omega.is_rational:
        raise DegenerateInputError(f"x^2 - {t}x + {n} has rational roots")
    if theta is not None and not theta.is_rational and theta.D != omega.D:
        raise MixedFieldError(f"omega lies in Q(sqrt({omega.D})), theta in Q(sqrt({theta.D}))")
    return omega


def unit_projection(m: IntMatrix) -> IntMatrix:
    """(t, n; -1, 0) -> (t, 1; -1, 0)"""
    t, n = _normalized_entries(m)
    if n == 0:
        raise DomainError("degenerate index n = 0")
    return IntMatrix(((t, 1), (-1, 0)))


def unit_projection_identity(m: IntMatrix, theta: QuadInt) -> Tuple[Tuple[QuadInt, QuadInt], Tuple[QuadInt, QuadInt]]:
    """Both sides of (t, n; -1, 0)(1, theta) = (t, 1; -1, 0)(1, n*theta)"""
    t, n = _normalized_entries(m)
    left = (t + theta * n, QuadInt.rational(-1))
    p = unit_projection(m)
    scaled = theta * n
    right = (p[0, 0] + scaled * p[0, 1], QuadInt.rational(p[1, 0]) + scaled * p[1, 1])
    return left, right


def lemma_chain(m: IntMatrix) -> FunctorChain:
    """Normalize (a, 1; c, d), transpose, and apply the functor"""
    normalized, conjugator = normalize_endomorphism(m)
    transposed = normalized.transpose()
    image = functor_on_endo(endo(transposed)).m
    try:
        omega = real_quadratic_from_normalized(image)
    except DomainError as e:
        logger.info("no real quadratic integer for %s: %s", image.format(), e)
        omega = None
    logger.debug("functor chain %s -> %s (omega = %s)", m.format(), image.format(), omega)
    return FunctorChain(
        source=m,
        normalized=normalized,
        conjugator=conjugator,
        transposed=transposed,
        image=image,
        omega=omega,
    )
