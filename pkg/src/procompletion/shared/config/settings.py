from functools import lru_cache
from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings - every value can be overridden with a PROCOMPLETION_* variable"""

    model_config = SettingsConfigDict(
        env_prefix="PROCOMPLETION_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Logging
    log_level: str = "INFO"
    log_format: Literal["console", "json"] = "console"

    # Defaults for the command line
    default_ring: Literal["int", "rat", "padic"] = "rat"
    default_order: Literal["graded", "lex"] = "graded"

    # p-adic arithmetic
    padic_precision: int = Field(default=20, ge=1)
    precision_margin: int = Field(default=2, ge=0)

    # Guards
    order_search_limit: int = Field(default=64, ge=1)

    # Seed for the randomized factor order of the command line
    random_seed: int = 0

    @field_validator("log_level")
    @classmethod
    def _normalize_level(cls, value: str) -> str:
        value = value.upper()
        if value not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Unknown log level: {value}")
        return value


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Load settings once per process"""
    return Settings()
