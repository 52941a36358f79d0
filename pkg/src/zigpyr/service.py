"""Local HTTP service exposing construction, verification and proving.

Endpoints (JSON, stateless, CORS-enabled for localhost origins):

* ``GET /api/health``                      liveness + version
* ``GET /api/config?a&b&theta&family``     full configuration document
* ``POST /api/prove {identity, rules}``    identity prover

Degenerate parameter values return 200 with degeneracy flags set; only
malformed or nonpositive inputs are 400s.
"""

from __future__ import annotations

import os
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import Response
from fastapi.staticfiles import StaticFiles

from . import __version__
from .report import build_config_response, dumps_stable
from .trig_symbolic import (
    RULE_NAMES,
    CannotNormalizeError,
    RuleSet,
    TrigParseError,
    prove_identity_text,
)

DEFAULT_PORT = 8642
_LOCALHOST_RE = r"https?://(localhost|127\.0\.0\.1)(:\d+)?"


def _json(payload: dict, status_code: int = 200) -> Response:
    return Response(
        content=dumps_stable(payload),
        status_code=status_code,
        media_type="application/json",
    )


def _error(status_code: int, message: str) -> Response:
    return _json({"error": message}, status_code)


def create_app(ui_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="zigpyr", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origin_regex=_LOCALHOST_RE,
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/api/health")
    def health() -> Response:
        return _json({"status": "ok", "version": __version__})

    @app.head("/api/health")
    def health_head() -> Response:
        return Response(status_code=200, media_type="application/json")

    @app.get("/api/config")
    def config(a: str = "3", b: str = "4", theta: str = "90",
               family: str = "ziggurat") -> Response:
        try:
            a_val, b_val, theta_val = float(a), float(b), float(theta)
        except ValueError:
            return _error(400, "a, b and theta must be numbers")
        if not (a_val > 0 and b_val > 0):
            return _error(400, "a and b must be positive")
        if family not in ("ziggurat", "pyramid"):
            return _error(400, f"unknown family {family!r}")
        if family == "ziggurat" and not 0 < theta_val < 180:
            return _error(400, "ziggurat theta must lie strictly between 0 and 180")
        if family == "pyramid" and not 0 < theta_val < 90:
            return _error(400, "pyramid theta must lie strictly between 0 and 90")
        return _json(build_config_response(a_val, b_val, theta_val, family))

    @app.post("/api/prove")
    async def prove(request: Request) -> Response:
        try:
            body = await request.json()
        except Exception:
            return _error(400, "request body must be JSON")
        if not isinstance(body, dict) or "identity" not in body:
            return _error(400, "body must be an object with an 'identity' field")
        rules_in = body.get("rules", {})
        if not isinstance(rules_in, dict):
            return _error(400, "'rules' must be an object of rule-name booleans")
        unknown = set(rules_in) - set(RULE_NAMES)
        if unknown:
            return _error(400, f"unknown rules: {sorted(unknown)}")
        rules = RuleSet(**{k: bool(v) for k, v in rules_in.items()})
        try:
            report = prove_identity_text(str(body["identity"]), rules)
        except TrigParseError as exc:
            return _error(400, f"parse error: {exc} ")
        except CannotNormalizeError as exc:
            return _error(400, f"cannot normalize: {exc}")
        return _json(report.to_dict())

    if ui_dir and os.path.isdir(ui_dir):
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="explorer")

    return app


def serve(host: str = "127.0.0.1", port: int = DEFAULT_PORT,
          ui_dir: Optional[str] = None) -> None:
    import uvicorn

    uvicorn.run(create_app(ui_dir), host=host, port=port, log_level="info")
