"""
Application configuration helpers.
"""

from functools import lru_cache
from pathlib import Path
from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Configuration loaded from environment variables."""

    p_min: int = Field(3, alias="PADIC_P_MIN")
    p_max: int = Field(47, alias="PADIC_P_MAX")
    prec: int = Field(3, ge=1, alias="PADIC_PREC")
    deep_p_max: int = Field(97, alias="PADIC_DEEP_P_MAX")
    deep_prec: int = Field(4, ge=1, alias="PADIC_DEEP_PREC")
    jobs: int = Field(1, ge=1, alias="PADIC_JOBS")
    max_modulus_bits: int = Field(64, ge=8, alias="PADIC_MAX_MODULUS_BITS")
    work_precision_policy: Literal["tight", "conservative"] = Field("tight", alias="PADIC_WORK_PRECISION")
    qseries_nmax: int = Field(2500, ge=1, alias="PADIC_QSERIES_NMAX")
    cache_dir: Path | None = Field(None, alias="PADIC_CACHE_DIR")
    jacobi_exhaustive_p_max: int = Field(13, alias="PADIC_JACOBI_EXHAUSTIVE_P_MAX")
    jacobi_random_pairs: int = Field(200, ge=1, alias="PADIC_JACOBI_RANDOM_PAIRS")
    seed: int = Field(20240101, alias="PADIC_SEED")
    log_level: str = Field("INFO", alias="PADIC_LOG_LEVEL")

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", extra="ignore", populate_by_name=True
    )

    @field_validator("log_level")
    @classmethod
    def _upper_level(cls, value: str) -> str:
        value = value.upper()
        if value not in {"DEBUG", "INFO", "WARNING", "ERROR"}:
            raise ValueError(f"unknown log level {value!r}")
        return value


@lru_cache
def get_settings() -> Settings:
    """Return cached settings instance."""
    return Settings()
