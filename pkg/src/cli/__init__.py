"""
Command-line surface
"""
from .main import create_parser, join_option_values, main, resolve_config, run

__all__ = ["create_parser", "join_option_values", "main", "resolve_config", "run"]
