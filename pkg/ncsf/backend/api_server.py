"""
HTTP API for the ncsf toolkit.

A thin FastAPI layer over ``operations``, ``matrices`` and ``checks``.
Every response carries the same JSON shapes the command line prints
with ``--json``.

Endpoints:

* **GET /health** - liveness probe.
* **GET /convert** - ``expr`` (expression text or bare index), ``source``
  (basis of a bare index), ``target``, optional ``q_at``.
* **GET /product** - ``basis``, ``alpha``, ``beta``, optional ``target``.
* **GET /pieri** - ``basis`` (S, Qp or Sd), ``alpha``, ``s``,
  ``elementary``.
* **GET /matrix** - ``n``, ``source``, ``target``; rows of polynomial text.
* **GET /check/{name}** - runs one of the registered checks up to
  ``max_n``.

Malformed input answers 400 with the error message as detail.
"""

from __future__ import annotations

import logging
from typing import Any, Dict, Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware

from . import config, operations
from .checks import CHECKS, run_check
from .errors import DomainError
from .matrices import build_matrix, matrix_payload

logger = logging.getLogger(__name__)

app = FastAPI(title="ncsf", version="1.0.0")

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["*"],
    allow_headers=["*"],
)


def _bad_request(e: DomainError) -> HTTPException:
    logger.info(f"Rejected request: {e}")
    return HTTPException(status_code=400, detail=str(e))


@app.get("/health", response_model=Dict[str, Any])
async def health_check() -> Dict[str, Any]:
    return {"status": "healthy", "server": "ncsf", "checks": sorted(CHECKS)}


@app.get("/convert", response_model=Dict[str, Any])
async def convert(expr: str, target: str, source: Optional[str] = None,
                  q_at: Optional[int] = None) -> Dict[str, Any]:
    """Convert an expression to another basis, optionally specialising q."""
    try:
        value = operations.read_expression(expr, source)
        result = operations.specialize(operations.convert(value, target), q_at)
    except DomainError as e:
        raise _bad_request(e)
    return {"input": value.to_text(), "result": result.to_dict(), "text": result.to_text()}


@app.get("/product", response_model=Dict[str, Any])
async def product(basis: str, alpha: str, beta: str, target: Optional[str] = None) -> Dict[str, Any]:
    try:
        result = operations.multiply(basis, alpha, beta, target)
    except DomainError as e:
        raise _bad_request(e)
    return {"result": result.to_dict(), "text": result.to_text()}


@app.get("/pieri", response_model=Dict[str, Any])
async def pieri(basis: str, alpha: str, s: int, elementary: bool = False) -> Dict[str, Any]:
    try:
        result = operations.pieri(basis, alpha, s, elementary)
    except DomainError as e:
        raise _bad_request(e)
    return {"result": result.to_dict(), "text": result.to_text()}


@app.get("/matrix", response_model=Dict[str, Any])
async def matrix(n: int, source: str, target: str) -> Dict[str, Any]:
    """Transition matrix with row and column labels and polynomial entries as text."""
    try:
        source_basis, target_basis = operations.as_basis(source), operations.as_basis(target)
        frame = build_matrix(n, source_basis, target_basis)
    except DomainError as e:
        raise _bad_request(e)
    return matrix_payload(frame, source_basis, target_basis, n)


@app.get("/check/{name}", response_model=Dict[str, Any])
async def check(name: str, max_n: Optional[int] = None) -> Dict[str, Any]:
    if name not in CHECKS:
        raise HTTPException(status_code=404, detail=f"Unknown check {name}")
    try:
        report = run_check(name, max_n, workers=1)
    except DomainError as e:
        raise _bad_request(e)
    return report.to_dict()


def run(host: Optional[str] = None, port: Optional[int] = None) -> None:
    """Run the API with uvicorn."""
    import uvicorn  # type: ignore

    host = host or config.API_HOST
    port = port or config.API_PORT
    logger.info(f"Starting ncsf API on {host}:{port}")
    uvicorn.run(
        "ncsf.backend.api_server:app",
        host=host,
        port=port,
        log_level="info",
        reload=False,
    )
