from typing import List

from fastapi import APIRouter, HTTPException

from app import schemas
from app.exceptions import InvalidHypergraphError
from app.presets import PRESETS, resolve_preset

router = APIRouter(prefix="/presets", tags=["presets"])


def _preset_out(name: str) -> schemas.PresetOut:
    h = resolve_preset(name)
    return schemas.PresetOut(name=name, k=h.k, n=h.n, edge_count=h.edge_count, text=h.to_text())


@router.get("", response_model=List[schemas.PresetOut])
def list_presets():
    return [_preset_out(name) for name in sorted(PRESETS)]


@router.get("/{name}", response_model=schemas.PresetOut)
def get_preset(name: str):
    """Any fixed preset, or a parametric one such as simplex-4 or single-edge-5."""
    try:
        return _preset_out(name)
    except InvalidHypergraphError as e:
        raise HTTPException(status_code=404, detail=str(e))
