"""
Configuration management for the L-function pipeline
"""
import os
from pathlib import Path
from typing import List, Literal, Optional, Union

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator

from .errors import UsageError

# Load environment variables
load_dotenv()

OutputFormat = Literal["json", "csv", "text"]


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or value.strip() == "":
        return default
    try:
        return int(value)
    except ValueError as e:
        raise UsageError(f"{name} must be an integer, got {value!r}") from e


def _env_curves() -> List[str]:
    raw = os.getenv("NCT_CM_CURVES", "")
    return [item.strip() for item in raw.split(";") if item.strip()]


class Config(BaseModel):
    """Main application configuration"""
    precision: int = Field(
        default_factory=lambda: _env_int("NCT_PRECISION", 128),
        description="Working precision in bits for numeric evaluation",
    )
    prime_bound: int = Field(
        default_factory=lambda: _env_int("NCT_PRIME_BOUND", 1000),
        description="Default upper bound for prime sweeps",
    )
    output_format: OutputFormat = Field(
        default_factory=lambda: os.getenv("NCT_OUTPUT_FORMAT", "json"),
        description="Report format",
    )
    threads: int = Field(
        default_factory=lambda: _env_int("NCT_THREADS", 1),
        description="Worker threads for prime sweeps",
    )
    jp_precision: int = Field(
        default_factory=lambda: _env_int("NCT_JP_PRECISION", 256),
        description="Working precision in bits for Jacobi-Perron iteration",
    )
    cm_curves: List[str] = Field(
        default_factory=_env_curves,
        description="Extra catalog curves as 'a4,a6,D' strings",
    )

    model_config = {"validate_default": True}

    @field_validator("precision", "jp_precision")
    @classmethod
    def _check_precision(cls, v: int) -> int:
        if v < 64:
            raise ValueError("precision must be at least 64 bits")
        return v

    @field_validator("prime_bound")
    @classmethod
    def _check_bound(cls, v: int) -> int:
        if v < 2:
            raise ValueError("prime bound must be at least 2")
        return v

    @field_validator("threads")
    @classmethod
    def _check_threads(cls, v: int) -> int:
        if v < 1:
            raise ValueError("threads must be positive")
        return v

    def merged(self, **overrides) -> "Config":
        """Return a copy with the non-None overrides applied and validated"""
        data = self.model_dump()
        data.update({k: v for k, v in overrides.items() if v is not None})
        try:
            return Config(**data)
        except ValidationError as e:
            raise UsageError(str(e)) from e


def read_config_file(path: Union[str, Path]) -> dict:
    """
    Parse a line-oriented key=value file.

    Blank lines and lines starting with '#' are skipped; unknown keys are
    rejected.
    """
    known = set(Config.model_fields)
    values: dict = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in known:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        if key == "cm_curves":
            values[key] = [c.strip() for c in value.split(";") if c.strip()]
        elif key == "output_format":
            values[key] = value
        else:
            try:
                values[key] = int(value)
            except ValueError as e:
                raise UsageError(f"{path}:{lineno}: {key} must be an integer") from e
    return values


def load_config(path: Optional[Union[str, Path]] = None) -> Config:
    """Defaults and environment, overridden by the config file if given"""
    base = Config()
    if path is None:
        return base
    return base.merged(**read_config_file(path))


# Global config instance
config = Config()
