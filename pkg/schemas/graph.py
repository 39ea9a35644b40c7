"""
Graph Schemas
Pydantic models for rotation documents, diagnostics and triangle listings
"""

from typing import List, Tuple

from pydantic import BaseModel, Field


class RotationDocumentRequest(BaseModel):
    """Request carrying a rotation-format document"""
    document: str = Field(..., min_length=1, description="Rotation-format text: 'n m', 'outer u v', then '<id>: neighbors'")


class FindingEntry(BaseModel):
    kind: str
    message: str


class DiagnosticsDocument(BaseModel):
    """Validation result"""
    ok: bool
    n: int
    m: int
    findings: List[FindingEntry] = Field(default_factory=list)


class TriangleEntry(BaseModel):
    corners: Tuple[int, int, int]


class OrderedTriangleEntry(BaseModel):
    """A separating triangle with its ordering annotations, in original vertex ids"""
    position: int
    corners: Tuple[int, int, int]
    reference_edge: Tuple[int, int]
    internal_angle: int
    time: int

    def line(self) -> str:
        u, v, w = self.corners
        x, y = self.reference_edge
        return f"{u} {v} {w}  ref={x}->{y}  angle={self.internal_angle}  time={self.time}"


class TriangleListResponse(BaseModel):
    count: int
    triangles: List[TriangleEntry]


class OrderResponse(BaseModel):
    count: int
    triangles: List[OrderedTriangleEntry]
