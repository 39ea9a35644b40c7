"""
Graph API Endpoints
Validate, list, order, decompose and verify embedded triangulations
"""

from fastapi import APIRouter

import schemas.graph as graph_schemas
from api.v1.errors import pipeline_errors
from schemas.report import RunReport
from schemas.tree import FourBlockTreeDocument
from services.export import tree_to_document
from services.pipeline import decomposition_service

router = APIRouter()


@router.post("/validate", response_model=graph_schemas.DiagnosticsDocument)
def validate_graph(request: graph_schemas.RotationDocumentRequest):
    """
    Validate an embedded triangulation; findings are returned, not raised
    """
    with pipeline_errors("Validation"):
        graph = decomposition_service.load(request.document)
        diagnostics = decomposition_service.validate(graph)
    return decomposition_service.diagnostics_document(graph, diagnostics)


@router.post("/triangles", response_model=graph_schemas.TriangleListResponse)
def list_separating_triangles(request: graph_schemas.RotationDocumentRequest):
    """
    List separating triangles in original vertex ids
    """
    with pipeline_errors("Triangle listing"):
        graph = decomposition_service.load(request.document)
        triangles = decomposition_service.separating(graph)
        entries = decomposition_service.triangle_entries(graph, triangles)
    return graph_schemas.TriangleListResponse(count=len(entries), triangles=entries)


@router.post("/order", response_model=graph_schemas.OrderResponse)
def order_triangles(request: graph_schemas.RotationDocumentRequest):
    """
    Separating triangles innermost-first with reference edges, angles and times
    """
    with pipeline_errors("Ordering"):
        graph = decomposition_service.load(request.document)
        ordered = decomposition_service.order(graph)
        entries = decomposition_service.ordered_entries(graph, ordered)
    return graph_schemas.OrderResponse(count=len(entries), triangles=entries)


@router.post("/decompose", response_model=FourBlockTreeDocument)
def decompose_graph(request: graph_schemas.RotationDocumentRequest):
    """
    Compute the 4-block tree
    """
    with pipeline_errors("Decomposition"):
        graph = decomposition_service.load(request.document)
        result = decomposition_service.run(graph)
    return tree_to_document(result.tree)


@router.post("/verify", response_model=RunReport)
def verify_graph(request: graph_schemas.RotationDocumentRequest):
    """
    Run the pipeline and the brute-force oracle and compare them
    """
    with pipeline_errors("Verification"):
        graph = decomposition_service.load(request.document)
        return decomposition_service.verify(graph, label="request")
