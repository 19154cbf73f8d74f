"""
Noncommutative torus parameters: skew matrices, group actions, normal
form, trace lattice and real multiplication
"""
from .action import apply_rs_action, moebius_boundary
from .groups import (
    RsElement,
    check_so_nn,
    eq11_lift,
    is_symplectic,
    split_form,
    standard_symplectic,
    symplectic_generators,
    symplectic_lift,
)
from .lattice import has_real_multiplication, trace_lattice
from .models import LatticeGenerator, NormalFormResult, NormalTorus, RealMultiplication, TraceLattice
from .normal import normal_form
from .skew import SkewMatrix, split_reals

__all__ = [
    "LatticeGenerator",
    "NormalFormResult",
    "NormalTorus",
    "RealMultiplication",
    "RsElement",
    "SkewMatrix",
    "TraceLattice",
    "apply_rs_action",
    "check_so_nn",
    "eq11_lift",
    "has_real_multiplication",
    "is_symplectic",
    "moebius_boundary",
    "normal_form",
    "split_form",
    "split_reals",
    "standard_symplectic",
    "symplectic_generators",
    "symplectic_lift",
    "trace_lattice",
]
