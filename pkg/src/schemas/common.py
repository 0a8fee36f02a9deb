"""
Common Pydantic schemas used across report files.
"""

from typing import Any, Dict, List, Type

from pydantic import BaseModel, Field

from src.schemas.config import RunConfig
from src.schemas.reports import (
    BoundProfile,
    CharacterRow,
    CosSumCheck,
    LargeValueHistogram,
    MajorantRow,
    MellinCheckResult,
    ModelMomentEstimate,
    MomentReport,
    PrimeMomentCheck,
    TrendSummary,
)
from src.utils.helpers import utc_timestamp


REPORT_TYPES: Dict[str, Type[BaseModel]] = {
    model.__name__: model
    for model in (
        CharacterRow,
        MomentReport,
        TrendSummary,
        MellinCheckResult,
        LargeValueHistogram,
        MajorantRow,
        PrimeMomentCheck,
        BoundProfile,
        CosSumCheck,
        ModelMomentEstimate,
    )
}


class ReportEnvelope(BaseModel):
    """Report payload with the provenance needed to reproduce it"""

    tool_version: str
    command_line: List[str]
    config: RunConfig
    timestamp: str = Field(default_factory=utc_timestamp)
    report_type: str
    payload: List[Dict[str, Any]]

    @classmethod
    def wrap(
        cls,
        reports: List[BaseModel],
        *,
        tool_version: str,
        command_line: List[str],
        config: RunConfig,
    ) -> "ReportEnvelope":
        """Build an envelope around a homogeneous list of report models"""
        report_type = type(reports[0]).__name__ if reports else "Empty"
        return cls(
            tool_version=tool_version,
            command_line=list(command_line),
            config=config,
            report_type=report_type,
            payload=[r.model_dump(mode="json") for r in reports],
        )

    def reports(self) -> List[BaseModel]:
        """Rebuild the payload models"""
        model = REPORT_TYPES.get(self.report_type)
        if model is None:
            return []
        return [model.model_validate(item) for item in self.payload]

    model_config = {
        "json_schema_extra": {
            "example": {
                "tool_version": "1.0.0",
                "command_line": ["theta-moment", "--q", "5", "--k", "1", "--parity", "even"],
                "config": {"tol": 1e-10, "workers": 1, "output_dir": "./reports",
                           "format": "json", "seed": 20240101, "params": {}},
                "timestamp": "2026-01-01T00:00:00+00:00",
                "report_type": "MomentReport",
                "payload": [],
            }
        }
    }


__all__ = ["ReportEnvelope", "REPORT_TYPES"]
