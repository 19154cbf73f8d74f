"""
Utils package initialization
"""
from .config import Config, config, load_config, read_config_file
from .errors import (
    BadReductionError,
    ConvergenceError,
    DegenerateInputError,
    DomainError,
    ExcludedPrimesDegenerate,
    MixedFieldError,
    NctError,
    NotPrimeError,
    PrecisionExhaustedError,
    RationalInputError,
    ShapeError,
    SingularMatrixError,
    UsageError,
)
from .primes import primes_up_to, require_prime

__all__ = [
    "BadReductionError",
    "Config",
    "ConvergenceError",
    "DegenerateInputError",
    "DomainError",
    "ExcludedPrimesDegenerate",
    "MixedFieldError",
    "NctError",
    "NotPrimeError",
    "PrecisionExhaustedError",
    "RationalInputError",
    "ShapeError",
    "SingularMatrixError",
    "UsageError",
    "config",
    "load_config",
    "primes_up_to",
    "read_config_file",
]
