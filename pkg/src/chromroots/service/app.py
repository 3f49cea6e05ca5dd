"""HTTP service wrapping the core package.

One endpoint per experiment plus direct wrappers around the chromatic,
stability and root-finding primitives.  The CLI shares the underlying
functions; the service exists for interactive and multi-client use.
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, HTTPException

from .. import experiments
from ..chromatic import ChromaticRecord
from ..graphs import Graph6Error, parse_graph6
from ..polynomials import Poly
from ..rootfind import all_roots
from ..stability import analyze_stability, stability_at_shift
from ..version import VERSION
from . import models

app = FastAPI(
    title="chromroots",
    version=VERSION,
    description="Exact chromatic polynomials and certified root real-part analysis",
)


def _report(rep: experiments.ExperimentReport) -> models.ExperimentReportModel:
    return models.ExperimentReportModel(**rep.to_dict(include_timing=True))


def _bad_request(exc: Exception):
    raise HTTPException(status_code=422, detail=str(exc))


@app.get("/health")
def health():
    return {"status": "ok", "version": VERSION}


@app.post("/experiments/minq", response_model=models.ExperimentReportModel)
def minq(req: models.MinqRequest):
    try:
        return _report(experiments.run_minq(req.p, req.q_max, req.precision_bits, req.tol, req.seed))
    except ValueError as exc:
        _bad_request(exc)


@app.post("/experiments/rootcloud", response_model=models.ExperimentReportModel)
def rootcloud(req: models.RootcloudRequest):
    try:
        return _report(
            experiments.run_rootcloud(
                order=req.order,
                graph6_lines=req.graph6_lines,
                precision_bits=req.precision_bits,
                tol=req.tol,
                seed=req.seed,
            )
        )
    except (ValueError, Graph6Error) as exc:
        _bad_request(exc)


@app.post("/experiments/verify-n3", response_model=models.ExperimentReportModel)
def verify_n3(req: models.VerifyN3Request):
    try:
        return _report(experiments.run_verify_n3(req.n))
    except ValueError as exc:
        _bad_request(exc)


@app.post("/experiments/kn-minus-2k2", response_model=models.ExperimentReportModel)
def kn_minus_2k2(req: models.KnMinus2K2Request):
    try:
        return _report(
            experiments.run_kn_minus_2k2(req.n_from, req.n_to, req.precision_bits, req.tol, req.seed)
        )
    except ValueError as exc:
        _bad_request(exc)


@app.post("/experiments/verify-coeffs", response_model=models.ExperimentReportModel)
def verify_coeffs(req: models.VerifyCoeffsRequest):
    try:
        return _report(experiments.run_verify_coeffs(req.n, req.random_count, req.seed))
    except ValueError as exc:
        _bad_request(exc)


@app.post("/experiments/identify-h", response_model=models.ExperimentReportModel)
def identify_h(req: models.IdentifyHRequest):
    try:
        return _report(experiments.run_identify_h(req.corpus_size, req.seed))
    except ValueError as exc:
        _bad_request(exc)


@app.post("/experiments/verify-quartic", response_model=models.ExperimentReportModel)
def verify_quartic(req: models.VerifyQuarticRequest):
    try:
        return _report(experiments.run_verify_quartic(req.p_max, req.q_max))
    except ValueError as exc:
        _bad_request(exc)


@app.post("/graphs/chromatic-record", response_model=models.ChromaticRecordModel)
def chromatic_record(req: models.GraphRequest):
    try:
        g = parse_graph6(req.graph6)
        record = ChromaticRecord.from_graph(g)
    except (Graph6Error, ValueError) as exc:
        _bad_request(exc)
    return models.ChromaticRecordModel(**record.to_dict())


@app.post("/polynomials/stability", response_model=models.StabilityResponse)
def polynomial_stability(req: models.ShiftedStabilityRequest):
    try:
        poly = Poly(req.coefficients)
        shift = Fraction(req.shift)
        report = analyze_stability(poly) if shift == 0 else stability_at_shift(poly, shift)
    except (ValueError, ZeroDivisionError) as exc:
        _bad_request(exc)
    return models.StabilityResponse(**report.to_dict())


@app.post("/polynomials/roots", response_model=models.RootSetModel)
def polynomial_roots(req: models.RootsRequest):
    try:
        poly = Poly(req.coefficients)
        roots = all_roots(poly, req.precision_bits, req.seed)
    except ValueError as exc:
        _bad_request(exc)
    return models.RootSetModel(**roots.to_dict())
