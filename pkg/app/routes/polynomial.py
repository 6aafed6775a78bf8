from fastapi import APIRouter, Query

from app import schemas
from app.polynomial import codegree_coefficient_of, expand_phi_rowling

router = APIRouter(prefix="/polynomial", tags=["polynomial"])


@router.get("/rowling", response_model=schemas.PolynomialResponse)
def get_rowling_polynomial(dmax: int = Query(15, ge=0, le=448)):
    p = expand_phi_rowling(max_codegree=dmax)
    values = {d: codegree_coefficient_of(p, d) for d in range(dmax + 1)}
    return schemas.PolynomialResponse(degree=p.degree, dmax=dmax, coefficients=schemas.exact_entries(values))
