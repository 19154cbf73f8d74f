"""
Local factors, Dirichlet characters and partial Euler products
"""
# compare imports elliptic, which imports lfunc.models: import it directly
from .artin import artin_pair_combine
from .characters import dirichlet_character, dirichlet_character_group, dirichlet_local_factor
from .euler import dirichlet_l_function, euler_product, root_l_function, torus_l_function
from .local import build_lp, build_lp_root, det_one_minus_zl, excluded_primes, local_zeta
from .models import (
    ArtinPair,
    CompareRow,
    DirichletCharacter,
    EulerEval,
    ExcludedPrimes,
    LocalFactor,
    LocalFrobenius,
)
from .report import format_real, render, to_jsonable, write_report
from .sweep import run_sweep, sweep_primes

__all__ = [
    "ArtinPair",
    "CompareRow",
    "DirichletCharacter",
    "EulerEval",
    "ExcludedPrimes",
    "LocalFactor",
    "LocalFrobenius",
    "artin_pair_combine",
    "build_lp",
    "build_lp_root",
    "det_one_minus_zl",
    "dirichlet_character",
    "dirichlet_character_group",
    "dirichlet_l_function",
    "dirichlet_local_factor",
    "euler_product",
    "excluded_primes",
    "format_real",
    "local_zeta",
    "render",
    "root_l_function",
    "run_sweep",
    "sweep_primes",
    "to_jsonable",
    "torus_l_function",
    "write_report",
]
