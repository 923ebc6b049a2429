"""HTTP service exposing runs, certification sweeps, and scenario listings."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..ingest import DatasetError
from .runner import execute_certify, execute_run, scenario_infos
from .schemas import CertifyRequest, CertifyResponse, RunRequest, RunResponse, ScenarioInfo


def create_app() -> FastAPI:
    app = FastAPI(
        title="stockguard",
        description=(
            "Inventory control with certified service levels and valid "
            "online prediction intervals for future operating cost."
        ),
    )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.get("/scenarios", response_model=list[ScenarioInfo])
    def scenarios() -> list[ScenarioInfo]:
        return scenario_infos()

    @app.post("/run", response_model=RunResponse)
    def run_endpoint(request: RunRequest) -> RunResponse:
        try:
            response, _ = execute_run(request)
        except KeyError as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from exc
        except (FileNotFoundError, DatasetError, ValueError) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        return response

    @app.post("/certify", response_model=CertifyResponse)
    def certify_endpoint(request: CertifyRequest) -> CertifyResponse:
        try:
            # no process fan-out from a request thread; results are identical
            return execute_certify(request, parallel=False)
        except KeyError as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from exc
        except (FileNotFoundError, DatasetError, ValueError) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    return app


app = create_app()
