"""
Main package initialization
"""
from .utils import config, Config, NctError, DomainError, UsageError

__all__ = [
    "config",
    "Config",
    "NctError",
    "DomainError",
    "UsageError",
]
