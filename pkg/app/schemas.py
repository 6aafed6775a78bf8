# Pydantic models for the API and the CLI configuration
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field, field_validator, model_validator

from app.hypergraph import MultiHypergraph, parse_hypergraph
from app.presets import resolve_preset


def format_exact(value: Union[int, Fraction]) -> str:
    """Integers as decimals, other rationals as reduced p/q with q > 0."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return str(value)


class HypergraphInput(BaseModel):
    text: Optional[str] = None
    preset: Optional[str] = None

    @model_validator(mode="after")
    def exactly_one_source(self):
        if (self.text is None) == (self.preset is None):
            raise ValueError("give exactly one of 'text' or 'preset'")
        return self

    def to_hypergraph(self) -> MultiHypergraph:
        if self.preset is not None:
            return resolve_preset(self.preset)
        return parse_hypergraph(self.text)


class InspectResponse(BaseModel):
    k: int
    n: int
    edge_count: int
    text: str
    flattened: str
    is_simple: bool
    is_veblen: bool
    component_count: int
    canonical_key: str
    aut_order: str


class AssociatedCoefficientResponse(BaseModel):
    label: str
    coefficient: str
    component_count: int
    rooting_count: Optional[int] = None


class CoefficientsRequest(HypergraphInput):
    dmax: int = Field(ge=0)
    report: bool = False
    time_budget: Optional[float] = Field(default=None, gt=0)


class CoefficientEntry(BaseModel):
    d: int
    value: str


class CoefficientsResponse(BaseModel):
    k: int
    n: int
    normalized_degree: str
    dmax: int
    valid_through: int
    complete: bool
    stopped_by: Optional[str] = None
    coefficients: List[CoefficientEntry]
    report: Optional[List[str]] = None


class ThresholdRequest(HypergraphInput):
    v: int = Field(ge=0)
    dmax: int = Field(ge=0)
    time_budget: Optional[float] = Field(default=None, gt=0)


class ThresholdResponse(BaseModel):
    v: int
    dmax: int
    threshold: Optional[int] = None
    valid_through: int
    values: List[CoefficientEntry]
    notes: List[str] = []


class SimplexResponse(BaseModel):
    k: int
    value: str
    digits: int
    asymptotic_ratio: str


class VeblenClassOut(BaseModel):
    key: str
    label: str
    text: str
    edge_count: int
    component_count: int


class VeblenClassesResponse(BaseModel):
    k: int
    d: int
    connected: bool
    count: int
    classes: List[VeblenClassOut]


class PolynomialResponse(BaseModel):
    degree: int
    dmax: int
    coefficients: List[CoefficientEntry]


class PresetOut(BaseModel):
    name: str
    k: int
    n: int
    edge_count: int
    text: str


class CommandConfig(BaseModel):
    """One CLI invocation after option parsing."""
    subcommand: str
    input_path: Optional[Path] = None
    preset: Optional[str] = None
    k: Optional[int] = None
    d: Optional[int] = None
    dmax: Optional[int] = None
    v: Optional[int] = None
    connected: bool = False
    output: Literal["plain", "structured"] = "plain"
    max_classes: Optional[int] = None
    time_budget: Optional[float] = None
    needs_input: bool = False

    @field_validator("max_classes", "time_budget")
    @classmethod
    def caps_positive(cls, value):
        if value is not None and value <= 0:
            raise ValueError("caps must be positive")
        return value

    @field_validator("k", "d", "dmax", "v")
    @classmethod
    def non_negative(cls, value):
        if value is not None and value < 0:
            raise ValueError("must be non-negative")
        return value

    @model_validator(mode="after")
    def one_input_source(self):
        if self.needs_input and (self.input_path is None) == (self.preset is None):
            raise ValueError("give exactly one of --input or --preset")
        if not self.needs_input and self.input_path is not None:
            raise ValueError(f"{self.subcommand} does not read an input file")
        return self

    def load_hypergraph(self) -> MultiHypergraph:
        if self.preset is not None:
            return resolve_preset(self.preset)
        return parse_hypergraph(self.input_path.read_text())


def exact_entries(values: Dict[int, Union[int, Fraction]]) -> List[CoefficientEntry]:
    return [CoefficientEntry(d=d, value=format_exact(values[d])) for d in sorted(values)]
