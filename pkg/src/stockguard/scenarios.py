"""Experiment presets: demand processes with their tuned hyperparameters.

Synthetic runs use T = 300 steps, a cost horizon of H = 10, 150 pretraining
steps, and demand bounded by 50; the cost-model forgetting factor and the
inference burn-in vary by scenario. The Elec2 preset evaluates 12 weeks of
half-hourly samples (T = 4032) with a one-day cost horizon (H = 48) and a
seasonal cost feature map.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

from .core import SystemConfig
from .demand import (
    AdversarialDemand,
    DemandGenerator,
    FeedbackDemand,
    PeriodicDemand,
    SeriesDemand,
    SirDemand,
)
from .harness import PredictorSettings
from .ingest import DEFAULT_COLUMN, load_elec2, split_windows

# half-hourly sample counts for the Elec2 seasonal periods:
# 3 h, 6 h, 12 h, 24 h, 7 days
ELEC2_FOURIER_PERIODS = (6, 12, 24, 48, 336)


@dataclass(frozen=True)
class Scenario:
    name: str
    description: str
    config: SystemConfig
    predictor: PredictorSettings
    requires_data: bool = False


_SYNTH_CONFIG = SystemConfig(
    T=300, H=10, alpha=0.05, beta=0.05, w_max=50.0, x_c=0.0, h=1.0, T_hist=150
)
_SYNTH_PREDICTOR = PredictorSettings(
    demand_lags=2, stock_lags=2, lam_demand=0.99, cost_ar_order=5
)

SCENARIOS: dict[str, Scenario] = {
    "periodic": Scenario(
        name="periodic",
        description="seasonal demand with Gaussian shocks",
        config=_SYNTH_CONFIG,
        predictor=replace(_SYNTH_PREDICTOR, lam_cost=0.99, t_star=40),
    ),
    "sir": Scenario(
        name="sir",
        description="spiking demand driven by a stochastic epidemic",
        config=_SYNTH_CONFIG,
        predictor=replace(_SYNTH_PREDICTOR, lam_cost=0.995, t_star=50),
    ),
    "feedback": Scenario(
        name="feedback",
        description="demand that tracks the previous stock level",
        config=_SYNTH_CONFIG,
        predictor=replace(_SYNTH_PREDICTOR, lam_cost=0.95, t_star=30),
    ),
    "adversarial": Scenario(
        name="adversarial",
        description="worst-case bounded demand that watches published orders",
        config=_SYNTH_CONFIG,
        predictor=replace(_SYNTH_PREDICTOR, lam_cost=0.99, t_star=40),
    ),
    "elec2": Scenario(
        name="elec2",
        description="NSW electricity demand (Elec2 dataset), 30-minute samples",
        config=SystemConfig(
            T=12 * 7 * 48,
            H=48,
            alpha=0.05,
            beta=0.05,
            w_max=1.0,
            x_c=0.0,
            h=1.0,
            T_hist=3 * 48,
        ),
        predictor=PredictorSettings(
            demand_lags=48,
            stock_lags=0,
            lam_demand=0.99,
            lam_cost=0.995,
            cost_ar_order=24,
            fourier_periods=ELEC2_FOURIER_PERIODS,
            t_star=10 * 48,
        ),
        requires_data=True,
    ),
}


def get_scenario(name: str) -> Scenario:
    try:
        return SCENARIOS[name]
    except KeyError:
        raise KeyError(
            f"unknown scenario {name!r}; available: {', '.join(sorted(SCENARIOS))}"
        ) from None


def make_generator(
    scenario: Scenario,
    config: SystemConfig,
    data_path: Optional[str | Path] = None,
    column: str = DEFAULT_COLUMN,
) -> DemandGenerator:
    """Instantiate the scenario's demand process for one seeded run."""
    name = scenario.name
    if name == "periodic":
        return PeriodicDemand(config.seed)
    if name == "sir":
        return SirDemand(config.seed)
    if name == "feedback":
        return FeedbackDemand(config.seed)
    if name == "adversarial":
        return AdversarialDemand(config.seed, w_max=config.w_max, x_c=config.x_c)
    if name == "elec2":
        if data_path is None:
            raise ValueError("the elec2 scenario requires a dataset file (--data)")
        series = load_elec2(data_path, column)
        _tuning, evaluation = split_windows(series, config.T_hist, config.T)
        return SeriesDemand(evaluation)
    raise KeyError(f"no generator for scenario {name!r}")
