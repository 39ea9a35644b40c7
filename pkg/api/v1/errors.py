"""
Error mapping for the graph and generator endpoints
Pipeline exceptions become HTTP errors: 400 for bad input, 422 for an
invalid triangulation, 500 for anything else the pipeline raises
"""

import logging
from contextlib import contextmanager
from typing import Iterator

from fastapi import HTTPException, status

from services.errors import (
    DecompositionError,
    GeneratorError,
    OracleLimitError,
    RotationFormatError,
    TriangulationError,
)

logger = logging.getLogger(__name__)


def to_http_error(e: DecompositionError, action: str) -> HTTPException:
    """HTTPException for a pipeline error raised while doing ``action``"""
    if isinstance(e, RotationFormatError):
        return HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=f"Malformed rotation document: {e}")
    if isinstance(e, TriangulationError):
        return HTTPException(
            status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
            detail={"message": str(e), "findings": e.diagnostics.messages()},
        )
    if isinstance(e, (OracleLimitError, GeneratorError)):
        return HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(e))
    logger.error(f"{action} failed: {e}")
    return HTTPException(status_code=status.HTTP_500_INTERNAL_SERVER_ERROR, detail=str(e))


@contextmanager
def pipeline_errors(action: str) -> Iterator[None]:
    try:
        yield
    except DecompositionError as e:
        raise to_http_error(e, action) from e
