"""
4-block tree document schemas
"""

from typing import List, Optional, Tuple

from pydantic import BaseModel, Field


class ComponentVertex(BaseModel):
    local_id: int
    origin_id: int


class ParentRef(BaseModel):
    id: int
    face: Tuple[int, int, int] = Field(..., description="Face of the parent, original vertex ids, CCW from the link half-edge")


class ComponentDocument(BaseModel):
    id: int
    outer_face: Tuple[int, int, int]
    vertices: List[ComponentVertex]
    rotation: List[List[int]] = Field(..., description="CCW neighbor lists by local id")
    parent: Optional[ParentRef] = None


class FourBlockTreeDocument(BaseModel):
    """Serialized 4-block tree"""
    root: int
    components: List[ComponentDocument]
