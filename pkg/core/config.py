"""
Multi-Dirac Engine: Configuration System
Loads YAML config and provides type-safe access via Pydantic models.
Supports environment variable overrides (MDX_SEED, MDX_LOG_LEVEL, MDX_FLIP_SCHOUTEN).
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Optional

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from core.exceptions import ConfigError

# ---------------------------------------------------------------------------
# Project paths
# ---------------------------------------------------------------------------
PROJECT_ROOT = Path(__file__).resolve().parent.parent
CONFIG_DIR = PROJECT_ROOT / "config"
STORAGE_DIR = PROJECT_ROOT / "storage"
LOGS_DIR = STORAGE_DIR / "logs"

SEED_MASK = (1 << 64) - 1
MAX_GENERATOR_DIMENSION = 6


# ---------------------------------------------------------------------------
# Pydantic config models
# ---------------------------------------------------------------------------

class GeneratorConfig(BaseModel):
    """Bounds for the random objects fed to the identity suites."""
    seed: int = 42
    dimension: int = 3
    ambient: int = 2                 # n
    max_poly_degree: int = 2
    max_terms: int = 3               # per coefficient polynomial
    max_basis_terms: int = 2         # per multivector / form
    numerator_bound: int = 5
    denominator_bound: int = 3

    @field_validator("seed")
    @classmethod
    def _fold_seed(cls, v: int) -> int:
        return v & SEED_MASK

    @field_validator("dimension")
    @classmethod
    def _check_dimension(cls, v: int) -> int:
        if not 1 <= v <= MAX_GENERATOR_DIMENSION:
            raise ValueError(f"dimension must be in 1..{MAX_GENERATOR_DIMENSION}, got {v}")
        return v

    @field_validator("max_poly_degree")
    @classmethod
    def _check_poly_degree(cls, v: int) -> int:
        if not 0 <= v <= 2:
            raise ValueError(f"max_poly_degree must be in 0..2, got {v}")
        return v

    @field_validator("max_terms")
    @classmethod
    def _check_terms(cls, v: int) -> int:
        if not 1 <= v <= 3:
            raise ValueError(f"max_terms must be in 1..3, got {v}")
        return v

    @field_validator("max_basis_terms", "numerator_bound", "denominator_bound")
    @classmethod
    def _check_positive(cls, v: int) -> int:
        if v <= 0:
            raise ValueError(f"bound must be positive, got {v}")
        return v

    @model_validator(mode="after")
    def _check_ambient(self) -> "GeneratorConfig":
        if not 1 <= self.ambient <= self.dimension:
            raise ValueError(f"ambient degree must be in 1..{self.dimension}, got {self.ambient}")
        return self

    def resolve(self) -> "GeneratorConfig":
        seed = os.getenv("MDX_SEED")
        if seed is None:
            return self
        try:
            return self.model_copy(update={"seed": int(seed, 0) & SEED_MASK})
        except ValueError as e:
            raise ConfigError(f"MDX_SEED is not an integer: {seed!r}") from e


class SuitesConfig(BaseModel):
    """Trial counts for the identity suites."""
    default_trials: Optional[int] = None             # None → each suite's own count
    trials: dict[str, int] = Field(default_factory=dict)   # per-suite override

    def trials_for(self, suite: str, fallback: int) -> int:
        if suite in self.trials:
            return self.trials[suite]
        return self.default_trials if self.default_trials is not None else fallback


class LoggingConfig(BaseModel):
    level: str = "WARNING"
    log_dir: str = ""                # empty → console only
    max_file_size_mb: int = 10
    backup_count: int = 3

    def resolve(self) -> "LoggingConfig":
        return self.model_copy(update={"level": os.getenv("MDX_LOG_LEVEL", self.level)})


class DebugConfig(BaseModel):
    """Harness self-checks."""
    flip_schouten_sign: bool = False

    def resolve(self) -> "DebugConfig":
        flag = os.getenv("MDX_FLIP_SCHOUTEN")
        if flag is None:
            return self
        return DebugConfig(flip_schouten_sign=flag.strip().lower() in ("1", "true", "yes", "on"))


class Settings(BaseModel):
    """Root settings object."""
    generator: GeneratorConfig = Field(default_factory=GeneratorConfig)
    suites: SuitesConfig = Field(default_factory=SuitesConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    debug: DebugConfig = Field(default_factory=DebugConfig)

    def resolve_env(self) -> "Settings":
        """Resolve environment variable overrides."""
        return Settings(
            generator=self.generator.resolve(),
            suites=self.suites,
            logging=self.logging.resolve(),
            debug=self.debug.resolve(),
        )


# ---------------------------------------------------------------------------
# Config loading
# ---------------------------------------------------------------------------

_settings: Optional[Settings] = None


def load_settings(config_path: Optional[Path] = None) -> Settings:
    """Load settings from YAML file, with env-var overrides."""
    global _settings

    load_dotenv(PROJECT_ROOT / ".env")
    if config_path is None:
        config_path = CONFIG_DIR / "settings.yaml"

    try:
        if config_path.exists():
            with open(config_path, "r", encoding="utf-8") as f:
                raw = yaml.safe_load(f) or {}
            settings = Settings(**raw)
        else:
            settings = Settings()
    except (ValidationError, yaml.YAMLError) as e:
        raise ConfigError(f"Invalid settings in {config_path}: {e}") from e

    _settings = settings.resolve_env()
    return _settings


def get_settings() -> Settings:
    """Get the current settings (loads defaults if not yet loaded)."""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings
