"""
Generator Schemas
Pydantic models describing generated instances
"""

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

GeneratorKind = Literal["canonical", "apollonian", "nested-chain", "flipped"]


class GenSpec(BaseModel):
    """Instance description; identical specs produce identical documents"""
    kind: GeneratorKind = Field(..., description="Generator family")
    n: Optional[int] = Field(None, ge=4, description="Vertex count (apollonian, flipped)")
    k: Optional[int] = Field(None, ge=1, description="Chain depth (nested-chain)")
    seed: int = Field(0, ge=0, lt=2**64, description="64-bit seed (apollonian, flipped)")
    flips: Optional[int] = Field(None, ge=0, description="Flip attempts (flipped; default 2n)")
    name: Optional[str] = Field(None, description="Fixture name (canonical)")

    @model_validator(mode="after")
    def check_size(self) -> "GenSpec":
        if self.kind == "canonical" and not self.name:
            raise ValueError("canonical instances need a fixture name")
        if self.kind in ("apollonian", "flipped") and self.n is None:
            raise ValueError(f"{self.kind} instances need n")
        if self.kind == "nested-chain" and self.k is None:
            raise ValueError("nested-chain instances need k")
        return self

    def label(self) -> str:
        if self.kind == "canonical":
            return self.name
        if self.kind == "apollonian":
            return f"apollonian(n={self.n}, seed={self.seed})"
        if self.kind == "flipped":
            flips = 2 * self.n if self.flips is None else self.flips
            return f"flipped(n={self.n}, seed={self.seed}, flips={flips})"
        return f"nested-chain(k={self.k})"


class FixtureInfo(BaseModel):
    """Canonical fixture catalogue entry"""
    name: str
    description: str
    separating_triangles: Optional[int] = None


class GeneratedDocument(BaseModel):
    """Rotation-format document of a generated instance"""
    spec: GenSpec
    n: int
    m: int
    document: str
