"""
Application settings using Pydantic Settings.
Loads configuration from environment variables with full validation.
"""

import os
from typing import Dict, Optional
from pydantic import Field, field_validator, computed_field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    # ==================== APPLICATION ====================
    ENVIRONMENT: str = Field(default="development", description="Application environment")
    DEBUG: bool = Field(default=False, description="Enable debug mode")
    APP_NAME: str = Field(default="thetamoments", description="Application name")
    VERSION: str = Field(default="1.0.0", description="Tool version recorded in every report")
    WORKERS: int = Field(
        default_factory=lambda: os.cpu_count() or 1,
        ge=1,
        description="Number of worker processes (default: machine parallelism)"
    )

    # ==================== NUMERICS ====================
    DEFAULT_TOL: float = Field(default=1e-10, gt=0.0, description="Default absolute tolerance")
    DEFAULT_SEED: int = Field(default=20240101, ge=0, description="Default random-model seed")
    REDUCTION_CHUNK_SIZE: int = Field(
        default=1024, ge=2, description="Fixed chunk size for deterministic reductions"
    )
    BOUND_EPSILON: float = Field(
        default=0.1, ge=0.0, description="Epsilon knob of the (log q)^(k/2+eps) factor"
    )

    # ==================== OUTPUT ====================
    OUTPUT_DIR: str = Field(default="./reports", description="Report output directory")
    OUTPUT_FORMAT: str = Field(default="csv", description="Report format: csv or json")

    # ==================== LOGGING ====================
    LOG_LEVEL: str = Field(default="INFO", description="Logging level")
    LOG_FORMAT: str = Field(default="text", description="Log format: json or text")
    LOG_FILE: Optional[str] = Field(default=None, description="Log file path (console only when unset)")

    # ==================== FIELD VALIDATORS ====================

    @field_validator('LOG_LEVEL')
    @classmethod
    def validate_log_level(cls, v):
        """Validate log level"""
        allowed = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']
        v_upper = v.upper()
        if v_upper not in allowed:
            raise ValueError(f"LOG_LEVEL must be one of {allowed}")
        return v_upper

    @field_validator('LOG_FORMAT')
    @classmethod
    def validate_log_format(cls, v):
        """Validate log format"""
        allowed = ['json', 'text']
        v_lower = v.lower()
        if v_lower not in allowed:
            raise ValueError(f"LOG_FORMAT must be one of {allowed}")
        return v_lower

    @field_validator('ENVIRONMENT')
    @classmethod
    def validate_environment(cls, v):
        """Validate environment"""
        allowed = ['development', 'staging', 'production', 'test']
        v_lower = v.lower()
        if v_lower not in allowed:
            raise ValueError(f"ENVIRONMENT must be one of {allowed}")
        return v_lower

    @field_validator('OUTPUT_FORMAT')
    @classmethod
    def validate_output_format(cls, v):
        """Validate report format"""
        allowed = ['csv', 'json']
        v_lower = v.lower()
        if v_lower not in allowed:
            raise ValueError(f"OUTPUT_FORMAT must be one of {allowed}")
        return v_lower

    # ==================== MODEL VALIDATORS ====================

    @model_validator(mode='after')
    def validate_cross_field_constraints(self):
        """Validate constraints that depend on multiple fields"""
        cpu_count = os.cpu_count() or 1
        if self.WORKERS > cpu_count:
            import warnings
            warnings.warn(
                f"WORKERS ({self.WORKERS}) exceeds the machine's CPU count ({cpu_count}). "
                "Results stay identical, throughput will not improve."
            )

        if self.DEFAULT_TOL < 1e-15:
            raise ValueError(
                f"DEFAULT_TOL ({self.DEFAULT_TOL}) is below binary64 working precision"
            )

        return self

    # ==================== COMPUTED PROPERTIES ====================

    @computed_field
    @property
    def run_defaults(self) -> Dict:
        """Get the RunConfig defaults dict"""
        return {
            "tol": self.DEFAULT_TOL,
            "workers": self.WORKERS,
            "output_dir": self.OUTPUT_DIR,
            "format": self.OUTPUT_FORMAT,
            "seed": self.DEFAULT_SEED,
        }

    # ==================== MODEL CONFIG ====================

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
        validate_default=True,
    )


# ==================== GLOBAL INSTANCE ====================

settings = Settings()


# ==================== HELPER FUNCTIONS ====================

def get_settings() -> Settings:
    """Get settings instance"""
    return settings


def reload_settings() -> Settings:
    """Reload settings from environment (useful for testing)"""
    return Settings()


__all__ = ["settings", "Settings", "get_settings", "reload_settings"]
