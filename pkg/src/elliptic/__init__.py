"""
CM elliptic curves over Q: reduction, point counts, local factors
"""
from .curves import (
    cm_catalog,
    count_points,
    count_points_naive,
    curve_local_factor,
    good_reduction,
    legendre_symbol,
    legendre_table,
    make_curve,
    parse_curve,
)
from .models import ApRecord, CurveModel

__all__ = [
    "ApRecord",
    "CurveModel",
    "cm_catalog",
    "count_points",
    "count_points_naive",
    "curve_local_factor",
    "good_reduction",
    "legendre_symbol",
    "legendre_table",
    "make_curve",
    "parse_curve",
]
