"""
Endomorphism-level functor and unit indices
"""
from .functor import (
    endo,
    functor_on_endo,
    lemma_chain,
    real_quadratic_from_normalized,
    unit_projection,
    unit_projection_identity,
)
from .index import unit_index, unit_index_table
from .models import EndoMatrix, FunctorChain, UnitIndexData

__all__ = [
    "EndoMatrix",
    "FunctorChain",
    "UnitIndexData",
    "endo",
    "functor_on_endo",
    "lemma_chain",
    "real_quadratic_from_normalized",
    "unit_index",
    "unit_index_table",
    "unit_projection",
    "unit_projection_identity",
]
