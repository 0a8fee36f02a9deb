"""
Pydantic schema for the resolved run configuration.
"""

from typing import Any, Dict

from pydantic import BaseModel, Field, field_validator

from src.config.constants import NON_RESULT_CONFIG_KEYS


class RunConfig(BaseModel):
    """Settings defaults overlaid by a config file overlaid by CLI flags"""

    tol: float = Field(..., gt=0.0, description="Absolute tolerance")
    workers: int = Field(..., ge=1, description="Worker processes")
    output_dir: str = Field(..., min_length=1)
    format: str = Field(default="csv", description="csv or json")
    seed: int = Field(..., ge=0)
    params: Dict[str, Any] = Field(default_factory=dict, description="Per-command parameters")

    @field_validator("format")
    @classmethod
    def validate_format(cls, v: str) -> str:
        v = str(v).strip().lower()
        if v not in ("csv", "json"):
            raise ValueError(f"format must be csv or json (got {v!r})")
        return v

    def result_snapshot(self) -> Dict[str, Any]:
        """Config keys that can change a numeric result (used in CSV headers)"""
        data = self.model_dump()
        for key in NON_RESULT_CONFIG_KEYS:
            data.pop(key, None)
        return data

    model_config = {
        "json_schema_extra": {
            "example": {
                "tol": 1e-10,
                "workers": 4,
                "output_dir": "./reports",
                "format": "csv",
                "seed": 20240101,
                "params": {"q": 5, "k": 1, "parity": "even"},
            }
        }
    }


__all__ = ["RunConfig"]
