from fastapi import APIRouter, Query

from app import schemas
from app.budget import Budget
from app.veblen import veblen_classes

router = APIRouter(prefix="/veblen", tags=["veblen"])


@router.get("/classes", response_model=schemas.VeblenClassesResponse)
def list_veblen_classes(
    k: int = Query(..., ge=2),
    d: int = Query(..., ge=0),
    connected: bool = False,
):
    """Veblen k-graphs with d edges, one representative per isomorphism class."""
    classes = veblen_classes(k, d, connected=connected, budget=Budget())
    return schemas.VeblenClassesResponse(
        k=k,
        d=d,
        connected=connected,
        count=len(classes),
        classes=[
            schemas.VeblenClassOut(
                key=str(c.key),
                label=c.label(),
                text=c.representative.to_text(),
                edge_count=c.edge_count,
                component_count=c.component_count,
            )
            for c in classes
        ],
    )
