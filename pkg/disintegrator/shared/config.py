"""
Configuration Management Module

Centralized configuration for Disintegrator using Pydantic.

Author: Disintegrator Team
Date: 2026-10-17
"""

from typing import Optional
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Config(BaseSettings):
    """
    Library and CLI configuration.

    Loads from .env file with environment variable overrides
    (prefix ``DISINTEGRATOR_``).
    """

    # ===== EXACT REALS =====
    default_precision: int = Field(20, ge=1)
    division_fuel: int = Field(64, ge=1)  # precision steps spent separating a divisor from 0
    max_squeeze_stage: int = Field(4096, ge=1)

    # ===== SEMIDECISION =====
    default_fuel: int = Field(64, ge=1)
    certification_stage: int = Field(12, ge=0)  # first annulus-certificate stage for radii
    witness_fuel_doublings: int = Field(8, ge=0)

    # ===== ORACLES & REALIZERS =====
    witness_bound: int = Field(128, ge=0)  # exact EC bound(m) default
    input_demand_cap: int = Field(2 ** 20, ge=1)
    initial_prefix: int = Field(64, ge=1)

    # ===== CONSTRUCTIONS =====
    mixture_initial_horizon: int = Field(4, ge=1)

    # ===== LOGGING =====
    log_level: str = "INFO"  # Options: DEBUG, INFO, WARNING, ERROR, CRITICAL
    log_format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    log_json: bool = False

    # ===== REPORTS =====
    report_schema: int = 1

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="DISINTEGRATOR_",
        case_sensitive=False,
        extra="ignore",
    )


# Global config instance
_config: Optional[Config] = None


def get_config() -> Config:
    """
    Get or create global configuration instance.

    Returns:
        Config: Library configuration

    Example:
        >>> config = get_config()
        >>> print(config.default_precision)
        20
    """
    global _config
    if _config is None:
        _config = Config()
    return _config


def set_config(config: Config) -> None:
    """
    Set global config instance.

    Args:
        config (Config): New configuration
    """
    global _config
    _config = config


def reset_config() -> None:
    """Reset global configuration (for testing)."""
    global _config
    _config = None
