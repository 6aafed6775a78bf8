from fastapi import APIRouter, HTTPException

from app import schemas
from app.simplex import asymptotic_ratio, simplex_Ck

router = APIRouter(prefix="/simplex", tags=["simplex"])

# C_k has roughly k log10(k) digits; keep responses reasonable
MAX_K = 2000


@router.get("/{k}", response_model=schemas.SimplexResponse)
def get_simplex_constant(k: int):
    if k > MAX_K:
        raise HTTPException(status_code=413, detail=f"k must be at most {MAX_K}")
    value = simplex_Ck(k)
    return schemas.SimplexResponse(
        k=k,
        value=str(value),
        digits=len(str(value)),
        asymptotic_ratio=schemas.format_exact(asymptotic_ratio(k)),
    )
