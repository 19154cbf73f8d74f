"""
Exact arithmetic: real quadratic numbers, roots of unity, integer polynomials
"""
from .poly import IntPoly
from .quadint import QuadInt, iv_bounds, iv_overlap, iv_precision, squarefree_decomposition
from .reals import NumericReal, RealRoot, RealValue, as_quadint, is_exact, parse_real, to_interval, to_mpf
from .roots import RootOfUnity, root_of_unity_value


def minimal_polynomial(q: QuadInt) -> IntPoly:
    return q.minimal_polynomial()


def trace_norm(q: QuadInt):
    return q.trace_norm()


__all__ = [
    "IntPoly",
    "NumericReal",
    "QuadInt",
    "RealRoot",
    "RealValue",
    "RootOfUnity",
    "as_quadint",
    "iv_bounds",
    "iv_overlap",
    "iv_precision",
    "is_exact",
    "minimal_polynomial",
    "parse_real",
    "root_of_unity_value",
    "squarefree_decomposition",
    "to_interval",
    "to_mpf",
    "trace_norm",
]
