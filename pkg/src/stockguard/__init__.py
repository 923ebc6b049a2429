"""Inventory control with certified service levels and valid cost inference.

The order policy guarantees, for any demand process bounded by w_max, that
the fraction of steps with stock above the critical threshold is at least
1 - alpha. The cost inference engine emits online prediction intervals for
the policy's H-step operating cost whose resolved coverage is at least
1 - beta, again without distributional assumptions.
"""

from .bounds import (
    ErrorBound,
    inference_bound,
    inference_gain,
    lemma1_oracle,
    policy_bound,
    policy_gain,
)
from .core import (
    HistoryLog,
    InventoryState,
    SystemConfig,
    horizon_cost,
    is_critical,
    period_cost,
    step_dynamics,
)
from .costinf import (
    CostInferenceEngine,
    CostInterval,
    MiscoverageLedger,
    adjust_interval,
    full_interval,
    nominal_interval,
)
from .harness import (
    PredictorSettings,
    RunResult,
    StepRecord,
    meets_guarantees,
    metrics_dict,
    pretrain,
    run,
    write_metrics_json,
    write_trajectory_csv,
)
from .policy import certified_order, trivial_order, uncertified_order
from .predict import (
    CostFeatures,
    DemandFeatures,
    RlsState,
    baseline_quantile_policy,
    empirical_quantile,
    rls_predict,
    rls_update,
)
from .scenarios import SCENARIOS, Scenario, get_scenario, make_generator

__version__ = "0.1.0"

__all__ = [
    "ErrorBound",
    "inference_bound",
    "inference_gain",
    "lemma1_oracle",
    "policy_bound",
    "policy_gain",
    "HistoryLog",
    "InventoryState",
    "SystemConfig",
    "horizon_cost",
    "is_critical",
    "period_cost",
    "step_dynamics",
    "CostInferenceEngine",
    "CostInterval",
    "MiscoverageLedger",
    "adjust_interval",
    "full_interval",
    "nominal_interval",
    "PredictorSettings",
    "RunResult",
    "StepRecord",
    "meets_guarantees",
    "metrics_dict",
    "pretrain",
    "run",
    "write_metrics_json",
    "write_trajectory_csv",
    "certified_order",
    "trivial_order",
    "uncertified_order",
    "CostFeatures",
    "DemandFeatures",
    "RlsState",
    "baseline_quantile_policy",
    "empirical_quantile",
    "rls_predict",
    "rls_update",
    "SCENARIOS",
    "Scenario",
    "get_scenario",
    "make_generator",
]
