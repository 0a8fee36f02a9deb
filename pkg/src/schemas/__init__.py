"""
Pydantic schemas package initialization.
Report models, run configuration and the report envelope.
"""

from .reports import (
    CharacterRow,
    MomentReport,
    TrendSummary,
    MellinCheckResult,
    LargeValueHistogram,
    MajorantRow,
    PrimeMomentCheck,
    PairTerm,
    RegimeBound,
    BoundProfile,
    CosSumCheck,
    ModelMomentEstimate,
)

from .config import RunConfig

from .common import ReportEnvelope, REPORT_TYPES


__all__ = [
    # Reports
    "CharacterRow",
    "MomentReport",
    "TrendSummary",
    "MellinCheckResult",
    "LargeValueHistogram",
    "MajorantRow",
    "PrimeMomentCheck",
    "PairTerm",
    "RegimeBound",
    "BoundProfile",
    "CosSumCheck",
    "ModelMomentEstimate",

    # Config
    "RunConfig",

    # Envelope
    "ReportEnvelope",
    "REPORT_TYPES",
]
