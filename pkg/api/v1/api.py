from fastapi import APIRouter
from api.v1.endpoints import graphs, generators

api_router = APIRouter()

# Include graph pipeline endpoints
api_router.include_router(graphs.router, prefix="/graphs", tags=["graphs"])

# Include generator endpoints
api_router.include_router(generators.router, prefix="/generators", tags=["generators"])
