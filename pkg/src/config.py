from pathlib import Path
from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

PROJECT_ROOT = Path(__file__).parent.parent
ENV_FILE_PATH = PROJECT_ROOT / ".env"


class BaseConfigSettings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=[".env", str(ENV_FILE_PATH)],
        extra="ignore",
        frozen=True,
        env_nested_delimiter="__",
        case_sensitive=False,
    )


class DualizationSettings(BaseConfigSettings):
    model_config = SettingsConfigDict(
        env_file=[".env", str(ENV_FILE_PATH)],
        env_prefix="DUALIZATION__",
        extra="ignore",
        frozen=True,
        case_sensitive=False,
    )

    engine: Literal["reverse_search", "bruteforce"] = "reverse_search"
    oracle_max_vertices: int = 20  # Brute force refuses larger vertex sets


class PipelineSettings(BaseConfigSettings):
    model_config = SettingsConfigDict(
        env_file=[".env", str(ENV_FILE_PATH)],
        env_prefix="PIPELINE__",
        extra="ignore",
        frozen=True,
        case_sensitive=False,
    )

    minsup: int = 1
    pipeline: Literal["full", "small_space"] = "small_space"
    tsup_decimals: int = 2  # Rounding used in rendered reports only

    @field_validator("minsup")
    @classmethod
    def validate_minsup(cls, v: int) -> int:
        if v < 0:
            raise ValueError("minsup must be non-negative")
        return v


class BenchSettings(BaseConfigSettings):
    model_config = SettingsConfigDict(
        env_file=[".env", str(ENV_FILE_PATH)],
        env_prefix="BENCH__",
        extra="ignore",
        frozen=True,
        case_sensitive=False,
    )

    workers: int = 1
    repeats: int = 1  # Peak units from the first run, wall time from the last

    @field_validator("workers", "repeats")
    @classmethod
    def validate_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("value must be at least 1")
        return v


class Settings(BaseConfigSettings):
    app_version: str = "0.1.0"
    environment: Literal["development", "staging", "production"] = "development"
    service_name: str = "dbasis"
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "INFO"

    dualization: DualizationSettings = Field(default_factory=DualizationSettings)
    pipeline: PipelineSettings = Field(default_factory=PipelineSettings)
    bench: BenchSettings = Field(default_factory=BenchSettings)


def get_settings() -> Settings:
    return Settings()
