"""
Run Report Schemas
Pydantic models for pipeline, verification and benchmark reports
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class PhaseTimings(BaseModel):
    """Wall-clock seconds per pipeline phase"""
    listing: float = Field(0.0, ge=0.0)
    ordering: float = Field(0.0, ge=0.0)
    splitting: float = Field(0.0, ge=0.0)

    @property
    def total(self) -> float:
        return self.listing + self.ordering + self.splitting


class RunReport(BaseModel):
    """Instance stats, timings and counters of one pipeline run"""
    label: str = ""
    n: int
    m: int
    separating_triangles: int
    components: int
    timings: PhaseTimings = Field(default_factory=PhaseTimings)
    transfers: int = Field(0, ge=0)
    counters: Dict[str, int] = Field(default_factory=dict)
    agreement: Optional[bool] = Field(None, description="Set when the run was checked against the oracle")
    differences: List[str] = Field(default_factory=list)


class BenchRow(BaseModel):
    kind: str
    size: int
    n: int
    m: int
    seconds: float
    transfers: int


class BenchResult(BaseModel):
    rows: List[BenchRow]
    slope: Optional[float] = Field(None, description="Least-squares slope of log(seconds) against log(n)")
