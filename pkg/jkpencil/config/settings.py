"""
Configuration management for jkpencil.
Loads from config.yaml with environment variable substitution; JKPENCIL_*
environment variables override file values.
"""

import os
import re
from pathlib import Path
from typing import Any, Literal

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict

_ENV_VAR_PATTERN = re.compile(r"\$\{([^}]+)\}")


class SamplingConfig(BaseModel):
    """Sample-point generation for manifold-level checks."""
    seed: int = 0
    points: int = Field(default=10, ge=1)
    perturbations: int = Field(default=6, ge=1)
    coordinate_range: int = Field(default=5, ge=1)


class GuardrailConfig(BaseModel):
    """Bounds on symbolic Schouten/Jacobi expansion."""
    max_degree: int = Field(default=4, ge=0)
    max_dim: int = Field(default=8, ge=1)


class OutputConfig(BaseModel):
    """Report output."""
    format: Literal["json", "text"] = "json"
    use_rich: bool = True
    indent: int = Field(default=2, ge=0)


class ConcurrencyConfig(BaseModel):
    """Per-point evaluation pool. Output order never depends on it."""
    workers: int = Field(default=1, ge=1)


class Settings(BaseSettings):
    """Main settings container."""

    model_config = SettingsConfigDict(
        env_prefix="JKPENCIL_",
        env_nested_delimiter="__",
        extra="ignore",
    )

    sampling: SamplingConfig = Field(default_factory=SamplingConfig)
    guardrails: GuardrailConfig = Field(default_factory=GuardrailConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    concurrency: ConcurrencyConfig = Field(default_factory=ConcurrencyConfig)

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        # environment beats config.yaml, which arrives as init kwargs
        return env_settings, init_settings, file_secret_settings


def _substitute_env_vars(value: Any) -> Any:
    """Recursively substitute ${VAR} patterns with environment variables."""
    if isinstance(value, str):
        for match in _ENV_VAR_PATTERN.findall(value):
            value = value.replace(f"${{{match}}}", os.getenv(match, ""))
        return value
    elif isinstance(value, dict):
        return {k: _substitute_env_vars(v) for k, v in value.items()}
    elif isinstance(value, list):
        return [_substitute_env_vars(item) for item in value]
    return value


def load_settings(
    config_path: str | Path | None = None,
    env_path: str | Path | None = None,
) -> Settings:
    """
    Load settings from config.yaml and .env file.

    Args:
        config_path: Path to config.yaml. Defaults to ./config.yaml, which
            may be absent (defaults apply).
        env_path: Path to .env file. Defaults to ./.env

    Returns:
        Settings object with all configuration loaded.

    Raises:
        FileNotFoundError: an explicitly given config_path does not exist.
    """
    if env_path is None:
        env_path = Path.cwd() / ".env"
    load_dotenv(env_path)

    explicit = config_path is not None
    config_path = Path(config_path) if explicit else Path.cwd() / "config.yaml"
    if not config_path.exists():
        if explicit:
            raise FileNotFoundError(f"Config file not found: {config_path}")
        return Settings()

    with open(config_path, encoding="utf-8") as f:
        raw_config = yaml.safe_load(f) or {}

    config = _substitute_env_vars(raw_config)

    return Settings(**config)
