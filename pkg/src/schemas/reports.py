"""
Pydantic schemas for computed reports.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from src.config.constants import Regime


class CharacterRow(BaseModel):
    """One row of a character table"""

    index: int = Field(..., ge=0)
    exponents: str
    parity: str
    conductor: int = Field(..., ge=1)
    primitive: bool

    model_config = {
        "json_schema_extra": {
            "example": {
                "index": 2,
                "exponents": "2",
                "parity": "even",
                "conductor": 5,
                "primitive": True,
            }
        }
    }


class MomentReport(BaseModel):
    """Aggregate moment over a character family"""

    q: int = Field(..., ge=1)
    k: int = Field(..., ge=0)
    family: str
    parity: Optional[str] = None
    raw: float = Field(..., ge=0.0)
    normalization: float = Field(..., gt=0.0)
    ratio: float
    eps: float = Field(..., gt=0.0, description="Tolerance the values were computed to")
    family_size: int = Field(..., ge=0)
    abs_error: float = Field(default=0.0, ge=0.0, description="First-order error bound on raw")
    empty_family: bool = False
    zero_count: Optional[int] = Field(default=None, ge=0)
    shifts: Optional[List[float]] = None
    bound: Optional[float] = None
    bound_ratio: Optional[float] = None
    flagged: List[int] = Field(default_factory=list, description="Character indices clamped or flagged")

    @model_validator(mode="after")
    def check_ratio(self):
        """Keep ratio consistent with raw / normalization"""
        expected = self.raw / self.normalization
        if abs(self.ratio - expected) > 1e-12 * max(1.0, abs(expected)):
            raise ValueError(f"ratio {self.ratio} != raw / normalization ({expected})")
        return self

    model_config = {
        "json_schema_extra": {
            "example": {
                "q": 5,
                "k": 1,
                "family": "even-primitive-nontrivial",
                "parity": "even",
                "raw": 0.62,
                "normalization": 8.94,
                "ratio": 0.069,
                "eps": 1e-10,
                "family_size": 1,
            }
        }
    }


class TrendSummary(BaseModel):
    """Stability summary of normalized ratios along a modulus scan"""

    count: int = Field(..., ge=0)
    mean: float
    coefficient_of_variation: float = Field(..., ge=0.0)
    first_decile_mean: float
    last_decile_mean: float
    drift_factor: float = Field(..., ge=1.0, description="max/min of the two decile means")


class MellinCheckResult(BaseModel):
    """Theta series against its Mellin quadrature for one character"""

    q: int
    character: int
    series_real: float
    series_imag: float
    quadrature_real: float
    quadrature_imag: float
    residual: float = Field(..., ge=0.0)
    height: float = Field(..., gt=0.0)
    step: float = Field(..., gt=0.0)
    tail_bound: float = Field(..., ge=0.0)

    @property
    def series(self) -> complex:
        return complex(self.series_real, self.series_imag)

    @property
    def quadrature(self) -> complex:
        return complex(self.quadrature_real, self.quadrature_imag)


class LargeValueHistogram(BaseModel):
    """Counts N_t(q, V) over a V grid"""

    q: int
    shifts: List[float]
    family: str
    excluded_quadratic: bool
    family_size: int = Field(..., ge=0)
    v_grid: List[float]
    counts: List[int]
    flagged: List[int] = Field(default_factory=list, description="Characters with log|L| clamped")

    @field_validator("v_grid")
    @classmethod
    def validate_ascending(cls, v: List[float]) -> List[float]:
        if any(b < a for a, b in zip(v, v[1:])):
            raise ValueError("V grid must be ascending")
        return v

    @model_validator(mode="after")
    def check_counts(self):
        if len(self.counts) != len(self.v_grid):
            raise ValueError("counts and v_grid differ in length")
        if any(b > a for a, b in zip(self.counts, self.counts[1:])):
            raise ValueError("counts must be non-increasing in V")
        return self

    def rows(self) -> List[Dict[str, Any]]:
        return [{"V": v, "count": c} for v, c in zip(self.v_grid, self.counts)]


class MajorantRow(BaseModel):
    """log|L| against the GRH majorant for one character and shift"""

    q: int
    character: int
    t: float
    log_abs_l: float
    majorant: float
    margin: float = Field(..., description="majorant + slack - log|L|")
    violation: bool
    clamped: bool = False


class PrimeMomentCheck(BaseModel):
    """Prime Dirichlet-polynomial moment against its mean-value bound"""

    q: int
    x: float
    k: int
    t: float
    lhs: float = Field(..., ge=0.0)
    rhs: float = Field(..., gt=0.0)
    ratio: float


class PairTerm(BaseModel):
    """F and E kernels for one pair of shifts"""

    i: int
    j: int
    delta: float = Field(..., ge=0.0)
    close: bool
    f: float
    e: float = Field(..., gt=0.0)


class RegimeBound(BaseModel):
    """Large-value bound at one V"""

    V: float
    regime: Regime
    value: float = Field(..., gt=0.0)


class BoundProfile(BaseModel):
    """All bound quantities for one (q, shifts, k)"""

    q: int
    k: int
    shifts: List[float]
    epsilon: float
    W: float
    log_log_q: float
    pairs: List[PairTerm]
    moment_bound: float
    max_value_shape: float
    A: Optional[float] = None
    regime: Optional[RegimeBound] = None

    @model_validator(mode="after")
    def check_w(self):
        expected = 2 * self.k * self.log_log_q + 2 * sum(p.f for p in self.pairs)
        if abs(self.W - expected) > 1e-12 * max(1.0, abs(expected)):
            raise ValueError("W does not match the stored F terms")
        return self


class CosSumCheck(BaseModel):
    """Prime cosine sum against its main term"""

    z: float
    a: float
    lhs: float
    rhs: float
    margin: float
    regime: str = Field(..., description="close (|a| < 1/100) or far")


class ModelMomentEstimate(BaseModel):
    """Monte-Carlo moment of the Steinhaus model"""

    q: int
    k: int
    samples: int = Field(..., ge=1)
    seed: int
    eta: int = Field(default=0, ge=0, le=1)
    support: int = Field(..., ge=2)
    estimate: float = Field(..., ge=0.0)
    standard_error: float = Field(..., ge=0.0)
    median_of_means: float = Field(..., ge=0.0)
    normalized: float
    exact_second_moment: Optional[float] = None
    rng: str

    model_config = {
        "json_schema_extra": {
            "example": {
                "q": 101,
                "k": 1,
                "samples": 10000,
                "seed": 20240101,
                "eta": 0,
                "support": 12,
                "estimate": 2.81,
                "standard_error": 0.03,
                "median_of_means": 2.80,
                "normalized": 0.28,
                "exact_second_moment": 2.80,
                "rng": "PCG64",
            }
        }
    }


__all__ = [
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
]
