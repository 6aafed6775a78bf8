from fastapi import APIRouter

from app import schemas
from app.associated import associated_coefficient, enumerate_euler_rootings
from app.canonical import aut_order, canonical_key

router = APIRouter(prefix="/hypergraphs", tags=["hypergraphs"])


@router.post("/inspect", response_model=schemas.InspectResponse)
def inspect_hypergraph(body: schemas.HypergraphInput):
    """Structural summary: flattening, Veblen test, components, canonical key and |Aut|."""
    h = body.to_hypergraph()
    return schemas.InspectResponse(
        k=h.k,
        n=h.n,
        edge_count=h.edge_count,
        text=h.to_text(),
        flattened=h.flatten().to_text(),
        is_simple=h.is_simple(),
        is_veblen=h.is_veblen(),
        component_count=h.component_count(),
        canonical_key=canonical_key(h).digest(),
        aut_order=str(aut_order(h)),
    )


@router.post("/associated-coefficient", response_model=schemas.AssociatedCoefficientResponse)
def get_associated_coefficient(body: schemas.HypergraphInput):
    h = body.to_hypergraph()
    value = associated_coefficient(h)
    rootings = len(enumerate_euler_rootings(h)) if h.is_connected() else None
    return schemas.AssociatedCoefficientResponse(
        label=h.short_label(),
        coefficient=schemas.format_exact(value),
        component_count=h.component_count(),
        rooting_count=rootings,
    )
