"""Request/response models of the stockguard service.

The CLI builds these same models from flags, so every behavior is reachable
identically over HTTP and from the command line.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class ConfigOverrides(BaseModel):
    """Optional overrides of a scenario's default run parameters."""

    model_config = ConfigDict(extra="forbid")

    T: Optional[int] = None
    H: Optional[int] = None
    alpha: Optional[float] = None
    beta: Optional[float] = None
    w_max: Optional[float] = None
    x_c: Optional[float] = None
    h: Optional[float] = None
    T_hist: Optional[int] = None
    x0: Optional[float] = None
    demand_lags: Optional[int] = None
    stock_lags: Optional[int] = None
    lam_demand: Optional[float] = None
    lam_cost: Optional[float] = None
    cost_ar_order: Optional[int] = None
    fourier_periods: Optional[list[int]] = None
    t_star: Optional[int] = None
    p0_scale: Optional[float] = None


class RunRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    scenario: str
    seed: int = 0
    policy: Literal["certified", "uncertified", "trivial"] = "certified"
    overrides: ConfigOverrides = Field(default_factory=ConfigOverrides)
    data_path: Optional[str] = None
    column: str = "nswdemand"
    out_dir: Optional[str] = None
    include_trajectory: bool = False


class StepRow(BaseModel):
    t: int
    stock: float
    order: Optional[float] = None
    demand: Optional[float] = None
    cost: Optional[float] = None
    policy_errors: int
    policy_bound: float
    horizon_cost: Optional[float] = None
    interval_lo: Optional[float] = None
    interval_hi: Optional[float] = None
    interval_full: Optional[bool] = None
    interval_empty: Optional[bool] = None
    inference_errors: Optional[int] = None
    inference_bound: Optional[float] = None


class RunResponse(BaseModel):
    scenario: str
    seed: int
    policy: str
    certified: bool
    metrics: dict[str, float]
    files: list[str] = []
    trajectory: Optional[list[StepRow]] = None


class CertifyRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    scenario: str
    seeds: int = Field(default=20, ge=1)
    first_seed: int = 0
    policy: Literal["certified", "uncertified", "trivial"] = "certified"
    overrides: ConfigOverrides = Field(default_factory=ConfigOverrides)
    data_path: Optional[str] = None
    column: str = "nswdemand"


class SeedOutcome(BaseModel):
    seed: int
    service_level: float
    coverage: float
    certified: bool


class CertifyResponse(BaseModel):
    scenario: str
    policy: str
    seeds: int
    certified: bool
    min_service_level: float
    min_coverage: float
    target_service_level: float
    target_coverage: float
    runs: list[SeedOutcome]


class ScenarioInfo(BaseModel):
    name: str
    description: str
    requires_data: bool
    defaults: dict[str, float | int | list[int]]
