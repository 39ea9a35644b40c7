"""
Generator API Endpoints
Canonical fixtures and generated instances in rotation format
"""

import logging
from typing import List, Optional

from fastapi import APIRouter, HTTPException, Query, status
from pydantic import ValidationError

from api.v1.errors import pipeline_errors
from config.fixtures import get_fixture_info, list_fixtures
from config.settings import settings
from schemas.generator import FixtureInfo, GeneratedDocument, GeneratorKind, GenSpec
from services.embedding import serialize_rotation_graph
from services.generators import generate

logger = logging.getLogger(__name__)
router = APIRouter()


@router.get("/fixtures", response_model=List[FixtureInfo])
def get_fixtures():
    """
    Catalogue of canonical fixtures
    """
    return [FixtureInfo(name=name, **get_fixture_info(name)) for name in list_fixtures()]


@router.get("/{kind}", response_model=GeneratedDocument)
def generate_instance(
    kind: GeneratorKind,
    n: Optional[int] = Query(None, description="Vertex count (apollonian, flipped)"),
    k: Optional[int] = Query(None, description="Chain depth (nested-chain)"),
    seed: Optional[int] = Query(None, description="Seed (default: QB_SEED)"),
    flips: Optional[int] = Query(None, description="Flip attempts (flipped)"),
    name: Optional[str] = Query(None, description="Fixture name (canonical)"),
):
    """
    Generate an instance and return it in rotation format
    """
    try:
        spec = GenSpec(kind=kind, n=n, k=k, seed=settings.DEFAULT_SEED if seed is None else seed, flips=flips, name=name)
    except ValidationError as e:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(e))
    with pipeline_errors("Generation"):
        graph = generate(spec)
    logger.info(f"Generated {spec.label()}")
    return GeneratedDocument(spec=spec, n=graph.vertex_count, m=graph.edge_count, document=serialize_rotation_graph(graph))
