import logging

from fastapi import APIRouter

from app import schemas
from app.budget import Budget
from app.coefficients import codegree_coefficients, threshold_search
from app.report import formula_report_3graphs

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/coefficients", tags=["coefficients"])


@router.post("", response_model=schemas.CoefficientsResponse)
def get_coefficients(body: schemas.CoefficientsRequest):
    """
    Codegree coefficients c_0..c_dmax. When the time budget runs out the
    response is partial and `valid_through` says how far it goes.
    """
    host = body.to_hypergraph()
    vector = codegree_coefficients(host, body.dmax, Budget(body.time_budget))
    report = None
    if body.report and host.k == 3:
        report = formula_report_3graphs(host, Budget(body.time_budget)).render().splitlines()
    return schemas.CoefficientsResponse(
        k=host.k,
        n=host.n,
        normalized_degree=str(vector.normalized_degree),
        dmax=body.dmax,
        valid_through=vector.valid_through,
        complete=vector.complete,
        stopped_by=vector.stopped_by,
        coefficients=schemas.exact_entries(vector.values),
        report=report,
    )


@router.post("/threshold", response_model=schemas.ThresholdResponse)
def get_threshold(body: schemas.ThresholdRequest):
    host = body.to_hypergraph()
    report = threshold_search(host, body.v, body.dmax, Budget(body.time_budget))
    return schemas.ThresholdResponse(
        v=body.v,
        dmax=body.dmax,
        threshold=report.largest_nonzero,
        valid_through=report.valid_through,
        values=schemas.exact_entries(report.values),
        notes=report.notes,
    )
