"""Settings for the l2alex engine and command line."""

import os
from pathlib import Path

from pydantic import BaseModel, Field, field_validator


def _default_cache_path() -> Path:
    override = os.environ.get("L2ALEX_CACHE")
    if override:
        return Path(override).expanduser()
    return Path.home() / ".cache" / "l2alex" / "torsions.jsonl"


class CacheConfig(BaseModel):
    """Configuration for the torsion result cache."""

    path: Path = Field(
        default_factory=_default_cache_path,
        description="JSON-lines cache file, overridden by L2ALEX_CACHE",
    )
    enabled: bool = Field(
        default=True,
        description="Whether computed torsions are cached",
    )


class GeometryConfig(BaseModel):
    """Limits for dual-ball geometry output."""

    max_dimension: int = Field(
        default=3,
        description="Largest number of coefficient variables for dual balls",
    )
    max_generators: int = Field(
        default=12,
        description="Largest number of zonotope generators",
    )


class CheckConfig(BaseModel):
    """Configuration for the consistency-check runner."""

    grid_radius: int = Field(
        default=5,
        description="Radius of the (p, q) parameter grid",
    )
    workers: int = Field(
        default=4,
        description="Worker threads used to evaluate suites",
    )
    random_cases: int = Field(
        default=500,
        description="Randomized cases per property suite",
    )
    seed: int = Field(
        default=20140101,
        description="Seed for randomized property suites",
    )

    @field_validator("grid_radius", "workers", "random_cases")
    @classmethod
    def validate_positive(cls, v: int) -> int:
        """Validate that counts and radii are positive."""
        if v <= 0:
            raise ValueError("grid radius, worker count and case count must be positive")
        return v


class LoggingConfig(BaseModel):
    """Configuration for logging."""

    level: str = Field(
        default_factory=lambda: os.environ.get("L2ALEX_LOG_LEVEL", "WARNING"),
        description="Root log level",
    )
    format: str = Field(
        default="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        description="Log record format",
    )


class Settings(BaseModel):
    """Global settings for the application."""

    cache: CacheConfig = Field(
        default_factory=CacheConfig,
        description="Result cache configuration",
    )
    geometry: GeometryConfig = Field(
        default_factory=GeometryConfig,
        description="Dual-ball geometry limits",
    )
    checks: CheckConfig = Field(
        default_factory=CheckConfig,
        description="Consistency-check configuration",
    )
    logging: LoggingConfig = Field(
        default_factory=LoggingConfig,
        description="Logging configuration",
    )


# Create a global settings instance
settings = Settings()
