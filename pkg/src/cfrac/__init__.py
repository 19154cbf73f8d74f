"""
Continued fractions, fundamental units and Jacobi-Perron expansions
"""
from .expansion import cf_expand, cf_value, convergents, period_matrix, period_start
from .jacobi_perron import digit_matrix, jacobi_perron, period_product
from .models import CfExpansion, JpState, UnitData
from .units import fundamental_unit, multiplication_matrix, unit_matrix_for_theta, unit_power_for_theta

__all__ = [
    "CfExpansion",
    "JpState",
    "UnitData",
    "cf_expand",
    "cf_value",
    "convergents",
    "digit_matrix",
    "fundamental_unit",
    "jacobi_perron",
    "multiplication_matrix",
    "period_matrix",
    "period_product",
    "period_start",
    "unit_matrix_for_theta",
    "unit_power_for_theta",
]
