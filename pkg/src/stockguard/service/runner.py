"""Service operations: the single implementation behind HTTP and the CLI."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, replace
from pathlib import Path

from ..core import SystemConfig
from ..harness import (
    PredictorSettings,
    RunResult,
    meets_guarantees,
    metrics_dict,
    run,
    write_metrics_json,
    write_trajectory_csv,
)
from ..scenarios import SCENARIOS, Scenario, get_scenario, make_generator
from .schemas import (
    CertifyRequest,
    CertifyResponse,
    ConfigOverrides,
    RunRequest,
    RunResponse,
    ScenarioInfo,
    SeedOutcome,
    StepRow,
)

_CONFIG_KEYS = ("T", "H", "alpha", "beta", "w_max", "x_c", "h", "T_hist", "x0")
_PREDICTOR_KEYS = (
    "demand_lags",
    "stock_lags",
    "lam_demand",
    "lam_cost",
    "cost_ar_order",
    "fourier_periods",
    "t_star",
    "p0_scale",
)


def apply_overrides(
    scenario: Scenario, overrides: ConfigOverrides, seed: int
) -> tuple[SystemConfig, PredictorSettings]:
    """Merge request overrides into the scenario defaults."""
    config_patch = {
        k: v
        for k, v in overrides.model_dump().items()
        if k in _CONFIG_KEYS and v is not None
    }
    predictor_patch = {
        k: v
        for k, v in overrides.model_dump().items()
        if k in _PREDICTOR_KEYS and v is not None
    }
    if "fourier_periods" in predictor_patch:
        predictor_patch["fourier_periods"] = tuple(predictor_patch["fourier_periods"])
    config = replace(scenario.config, seed=seed, **config_patch)
    predictor = replace(scenario.predictor, **predictor_patch)
    return config, predictor


def execute_run(request: RunRequest) -> tuple[RunResponse, RunResult]:
    scenario = get_scenario(request.scenario)
    config, predictor = apply_overrides(scenario, request.overrides, request.seed)
    generator = make_generator(
        scenario, config, data_path=request.data_path, column=request.column
    )
    result = run(
        config,
        generator,
        predictor=predictor,
        policy=request.policy,
        scenario=scenario.name,
    )
    files: list[str] = []
    if request.out_dir is not None:
        out = Path(request.out_dir)
        csv_path = out / "trajectory.csv"
        json_path = out / "metrics.json"
        write_trajectory_csv(result, csv_path)
        write_metrics_json(result, json_path)
        files = [str(csv_path), str(json_path)]
    trajectory = None
    if request.include_trajectory:
        trajectory = [StepRow(**asdict(step)) for step in result.steps]
    response = RunResponse(
        scenario=scenario.name,
        seed=request.seed,
        policy=request.policy,
        certified=meets_guarantees(result),
        metrics=metrics_dict(result),
        files=files,
        trajectory=trajectory,
    )
    return response, result


def _one_seed(request: RunRequest) -> SeedOutcome:
    response, result = execute_run(request)
    return SeedOutcome(
        seed=request.seed,
        service_level=result.service_level,
        coverage=result.coverage,
        certified=response.certified,
    )


def execute_certify(request: CertifyRequest, parallel: bool = True) -> CertifyResponse:
    """Run every seed and report whether all meet both certified criteria."""
    scenario = get_scenario(request.scenario)
    base = RunRequest(
        scenario=request.scenario,
        policy=request.policy,
        overrides=request.overrides,
        data_path=request.data_path,
        column=request.column,
    )
    requests = [
        base.model_copy(update={"seed": request.first_seed + i})
        for i in range(request.seeds)
    ]
    if parallel and request.seeds > 1:
        with ProcessPoolExecutor() as pool:
            outcomes = list(pool.map(_one_seed, requests))
    else:
        outcomes = [_one_seed(r) for r in requests]
    config, _ = apply_overrides(scenario, request.overrides, request.first_seed)
    return CertifyResponse(
        scenario=scenario.name,
        policy=request.policy,
        seeds=request.seeds,
        certified=all(o.certified for o in outcomes),
        min_service_level=min(o.service_level for o in outcomes),
        min_coverage=min(o.coverage for o in outcomes),
        target_service_level=1.0 - config.alpha,
        target_coverage=1.0 - config.beta,
        runs=outcomes,
    )


def scenario_infos() -> list[ScenarioInfo]:
    infos = []
    for name in sorted(SCENARIOS):
        s = SCENARIOS[name]
        defaults: dict = {
            k: v for k, v in asdict(s.config).items() if k != "seed"
        }
        defaults.update(asdict(s.predictor))
        defaults["fourier_periods"] = list(defaults["fourier_periods"])
        infos.append(
            ScenarioInfo(
                name=s.name,
                description=s.description,
                requires_data=s.requires_data,
                defaults=defaults,
            )
        )
    return infos
