"""Request and response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class ExperimentReportModel(BaseModel):
    experiment: str
    parameters: dict
    items: list
    summary: dict
    tool_version: str
    timing_seconds: float


class MinqRequest(BaseModel):
    p: int = Field(ge=2, le=6)
    q_max: int = Field(default=50, ge=2, le=200)
    precision_bits: int = Field(default=256, ge=53, le=4096)
    tol: float = Field(default=1e-9, gt=0)
    seed: int = 0


class RootcloudRequest(BaseModel):
    order: int | None = Field(default=None, ge=1, le=7)
    graph6_lines: list[str] | None = None
    precision_bits: int = Field(default=256, ge=53, le=4096)
    tol: float = Field(default=1e-9, gt=0)
    seed: int = 0


class VerifyN3Request(BaseModel):
    n: int = Field(ge=1, le=7)


class KnMinus2K2Request(BaseModel):
    n_from: int = Field(default=4, ge=4, le=12)
    n_to: int = Field(default=10, ge=4, le=12)
    precision_bits: int = Field(default=256, ge=53, le=4096)
    tol: float = Field(default=1e-9, gt=0)
    seed: int = 0


class VerifyCoeffsRequest(BaseModel):
    n: int = Field(ge=1, le=10)
    random_count: int | None = Field(default=None, ge=1, le=10000)
    seed: int = 0


class IdentifyHRequest(BaseModel):
    corpus_size: int = Field(default=500, ge=1, le=10000)
    seed: int = 0


class VerifyQuarticRequest(BaseModel):
    p_max: int = Field(default=6, ge=2, le=6)
    q_max: int = Field(default=50, ge=2, le=200)


class GraphRequest(BaseModel):
    graph6: str


class ChromaticRecordModel(BaseModel):
    graph6: str
    coefficients: list[str]
    coefficient_magnitudes: list[str]
    falling_factorial: list[str]
    chromatic_number: int


class PolynomialRequest(BaseModel):
    coefficients: list[str] = Field(description="decimal coefficient strings, lowest power first")


class ShiftedStabilityRequest(PolynomialRequest):
    shift: str = Field(default="0", description="rational shift, e.g. '3/2'")


class StabilityResponse(BaseModel):
    verdict: str
    shift: str
    certificate: dict


class RootsRequest(PolynomialRequest):
    precision_bits: int = Field(default=256, ge=53, le=4096)
    seed: int = 0


class RootModel(BaseModel):
    re: str
    im: str
    radius: str
    multiplicity: int


class RootSetModel(BaseModel):
    degree: int
    precision_bits: int
    roots: list[RootModel]
