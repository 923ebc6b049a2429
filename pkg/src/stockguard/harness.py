"""Closed-loop simulation: pretraining, the per-step protocol, metrics, export.

Per-step protocol at step t:
  1. observe the stock X[t] and, for t >= 1, count a critical event if
     X[t] <= x_c (the event at the current stock is counted before ordering);
  2. resolve the interval emitted H steps ago (its horizon cost is now
     known), bank its residual, and update the cost model with that target;
  3. predict demand and place the order U[t] (certified policy by default);
  4. the period cost c[t] = U[t] + h X[t] is now determined; it becomes
     visible side information from t + 1 on;
  5. while a horizon starting at t still fits the run (t <= T - H), emit the
     adjusted prediction interval for that horizon cost;
  6. draw the demand W[t] (the process sees the stock and published order)
     and advance the stock;
  7. update the demand model with the realized (features, demand) pair.

Pretraining replays the same dynamics for T_hist steps before t = 0 under
the order-up-to-quantile baseline policy, updating only the demand model.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from .bounds import inference_bound, policy_bound
from .core import (
    HistoryLog,
    InventoryState,
    SystemConfig,
    is_critical,
    period_cost,
    step_dynamics,
)
from .costinf import CostInferenceEngine
from .demand import DemandGenerator
from .policy import certified_order, trivial_order, uncertified_order
from .predict import (
    CostFeatures,
    DemandFeatures,
    RlsState,
    baseline_quantile_policy,
    rls_predict,
    rls_update,
)

POLICIES = ("certified", "uncertified", "trivial")


@dataclass(frozen=True)
class PredictorSettings:
    """Hyperparameters of the tracked demand and cost models."""

    demand_lags: int = 2
    stock_lags: int = 2
    lam_demand: float = 0.99
    lam_cost: float = 0.99
    cost_ar_order: int = 5
    fourier_periods: tuple[int, ...] = ()
    t_star: int = 40
    p0_scale: float = 100.0

    def __post_init__(self) -> None:
        if self.demand_lags < 0 or self.stock_lags < 0:
            raise ValueError("lag orders must be >= 0")
        if self.cost_ar_order < 1:
            raise ValueError("cost AR order must be >= 1")
        if self.t_star < 0:
            raise ValueError("t_star must be >= 0")
        if self.p0_scale <= 0:
            raise ValueError("p0_scale must be positive")


@dataclass
class StepRecord:
    """One trajectory row; fields undefined at a step are None."""

    t: int
    stock: float
    order: Optional[float] = None
    demand: Optional[float] = None
    cost: Optional[float] = None
    policy_errors: int = 0
    policy_bound: float = 0.0
    horizon_cost: Optional[float] = None
    interval_lo: Optional[float] = None
    interval_hi: Optional[float] = None
    interval_full: Optional[bool] = None
    interval_empty: Optional[bool] = None
    inference_errors: Optional[int] = None
    inference_bound: Optional[float] = None


CSV_COLUMNS = [
    "t",
    "stock",
    "order",
    "demand",
    "cost",
    "policy_errors",
    "policy_bound",
    "horizon_cost",
    "interval_lo",
    "interval_hi",
    "interval_full",
    "interval_empty",
    "inference_errors",
    "inference_bound",
]


@dataclass
class RunResult:
    """Per-step trajectory plus the summary metrics of one run."""

    scenario: str
    policy: str
    config: SystemConfig
    predictor: PredictorSettings
    steps: list[StepRecord]
    service_level: float
    coverage: float
    mean_cost: float
    critical_events: int
    resolved_horizons: int
    miscovered_horizons: int
    max_inference_errors: int


def pretrain(
    config: SystemConfig,
    generator: DemandGenerator,
    features: DemandFeatures,
    rls: RlsState,
) -> tuple[RlsState, HistoryLog]:
    """Warm up the demand model on T_hist steps of baseline-policy data."""
    log = HistoryLog(start=-config.T_hist)
    log.push_stock(config.x0)
    seen: list[float] = []
    for t in range(-config.T_hist, 0):
        stock = log.stock_at(t)
        phi = features.vector(log, t)
        order = baseline_quantile_policy(seen, config.alpha, stock, config.w_max)
        demand = generator.draw(t, stock, order)
        log.push_transition(order, demand, period_cost(order, stock, config.h))
        log.push_stock(step_dynamics(stock, order, demand))
        rls = rls_update(rls, phi, demand)
        seen.append(demand)
    return rls, log


def run(
    config: SystemConfig,
    generator: DemandGenerator,
    predictor: PredictorSettings = PredictorSettings(),
    policy: str = "certified",
    scenario: str = "",
    nominal_override=None,
) -> RunResult:
    """Simulate one closed-loop run and return its trajectory and metrics."""
    if policy not in POLICIES:
        raise ValueError(f"unknown policy {policy!r}, expected one of {POLICIES}")
    T, H = config.T, config.H
    cap = config.cost_cap

    demand_features = DemandFeatures(predictor.demand_lags, predictor.stock_lags)
    cost_features = CostFeatures(
        predictor.cost_ar_order, H, predictor.fourier_periods
    )
    demand_rls = RlsState.initial(
        demand_features.dim, predictor.lam_demand, predictor.p0_scale
    )
    theta0 = np.zeros(cost_features.dim)
    theta0[0] = cap / 2.0
    cost_rls = RlsState.initial(
        cost_features.dim, predictor.lam_cost, predictor.p0_scale, theta0=theta0
    )

    demand_rls, log = pretrain(config, generator, demand_features, demand_rls)

    b_policy = policy_bound(T, config.alpha)
    b_inf = inference_bound(T, H, config.beta, predictor.t_star)
    engine = CostInferenceEngine(
        horizon=H,
        beta=config.beta,
        cap=cap,
        bound=b_inf,
        nominal_override=nominal_override,
    )
    pending: dict[int, tuple[np.ndarray, float]] = {}

    records: list[StepRecord] = []
    state = InventoryState(t=0, stock=log.stock_at(0), critical_events=0)
    max_inf_errors = 0

    def resolve(tau: int, update_model: bool) -> None:
        nonlocal cost_rls
        realized = log.horizon_cost(tau, H)
        assert realized is not None
        phi_c, point = pending.pop(tau)
        engine.resolve(tau, realized, point)
        records[tau].horizon_cost = realized
        if update_model:
            cost_rls = rls_update(cost_rls, phi_c, realized)

    for t in range(T):
        stock = state.stock
        if t >= 1 and is_critical(stock, config.x_c):
            state.critical_events += 1
        if t - H >= 0:
            resolve(t - H, update_model=True)

        phi_d = demand_features.vector(log, t)
        w_hat = rls_predict(demand_rls, phi_d)
        if policy == "certified":
            order = certified_order(
                w_hat, stock, state.critical_events, t, T, config.alpha, config.w_max
            )
        elif policy == "trivial":
            order = trivial_order(stock, config.w_max)
        else:
            order = min(uncertified_order(w_hat, stock), config.w_max - stock)
        cost = period_cost(order, stock, config.h)

        record = StepRecord(
            t=t,
            stock=stock,
            order=order,
            cost=cost,
            policy_errors=state.critical_events,
            policy_bound=b_policy(t),
        )
        records.append(record)

        if t <= T - H:
            phi_c = cost_features.vector(log, t)
            point = rls_predict(cost_rls, phi_c)
            interval, inf_errors, _q = engine.emit(t, point)
            pending[t] = (phi_c, point)
            record.interval_lo = interval.lo
            record.interval_hi = interval.hi
            record.interval_full = interval.is_full
            record.interval_empty = interval.is_empty
            record.inference_errors = inf_errors
            record.inference_bound = b_inf(t)
            max_inf_errors = max(max_inf_errors, inf_errors)

        demand = generator.draw(t, stock, order)
        record.demand = demand
        log.push_transition(order, demand, cost)
        log.push_stock(step_dynamics(stock, order, demand))
        demand_rls = rls_update(demand_rls, phi_d, demand)

    final_stock = log.stock_at(T)
    if is_critical(final_stock, config.x_c):
        policy_errors += 1
    records.append(
        StepRecord(
            t=T,
            stock=final_stock,
            policy_errors=policy_errors,
            policy_bound=b_policy(T),
        )
    )
    # the interval emitted at t = T - H resolves only now, after c[T-1]
    resolve(T - H, update_model=False)

    return summarize(records, config, engine, scenario, policy, predictor)


def summarize(
    records: list[StepRecord],
    config: SystemConfig,
    engine: CostInferenceEngine,
    scenario: str,
    policy: str,
    predictor: PredictorSettings,
) -> RunResult:
    """Compute the two certified criteria and cost summaries."""
    T, H = config.T, config.H
    critical = records[T].policy_errors
    service_level = (T - critical) / T
    resolved = engine.ledger.resolved_count
    miscovered = engine.ledger.observed_miscoverages
    coverage = (resolved - miscovered) / (T - H + 1)
    mean_cost = float(np.mean([r.cost for r in records if r.cost is not None]))
    max_inf = max(
        (r.inference_errors for r in records if r.inference_errors is not None),
        default=0,
    )
    return RunResult(
        scenario=scenario,
        policy=policy,
        config=config,
        predictor=predictor,
        steps=records,
        service_level=service_level,
        coverage=coverage,
        mean_cost=mean_cost,
        critical_events=critical,
        resolved_horizons=resolved,
        miscovered_horizons=miscovered,
        max_inference_errors=max_inf,
    )


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_trajectory_csv(result: RunResult, path: str | Path) -> None:
    """Write the per-step records; byte-identical for identical runs."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in result.steps:
            writer.writerow([_cell(getattr(r, c)) for c in CSV_COLUMNS])


def metrics_dict(result: RunResult) -> dict[str, float]:
    """Flat key -> number map of the run's parameters and summaries."""
    c = result.config
    t_tilde = c.T - c.H + 1
    return {
        "T": c.T,
        "H": c.H,
        "alpha": c.alpha,
        "beta": c.beta,
        "w_max": c.w_max,
        "x_c": c.x_c,
        "h": c.h,
        "T_hist": c.T_hist,
        "seed": c.seed,
        "cost_cap": c.cost_cap,
        "service_level": result.service_level,
        "coverage": result.coverage,
        "mean_cost": result.mean_cost,
        "critical_events": result.critical_events,
        "resolved_horizons": result.resolved_horizons,
        "miscovered_horizons": result.miscovered_horizons,
        "max_inference_errors": result.max_inference_errors,
        "policy_bound_final": c.alpha * c.T,
        "inference_bound_final": c.beta * t_tilde,
    }


def write_metrics_json(result: RunResult, path: str | Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w") as f:
        json.dump(metrics_dict(result), f, indent=2, sort_keys=True)
        f.write("\n")


def meets_guarantees(result: RunResult) -> bool:
    """Both boxed criteria: service >= 1 - alpha and coverage >= 1 - beta."""
    c = result.config
    return (
        result.service_level >= 1.0 - c.alpha
        and result.coverage >= 1.0 - c.beta
    )
