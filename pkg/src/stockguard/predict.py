"""Linear-in-parameters predictors tracked by recursive least squares.

The demand model is an ARX regression on lagged demand and stock; the cost
model is an AR regression on lagged horizon costs, optionally with Fourier
terms for known periodicities. Both are tracked online by RLS with a
forgetting factor. Also provides the empirical quantile estimator used for
nominal cost intervals and the order-up-to-quantile baseline policy used
during pretraining.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import HistoryLog


@dataclass(frozen=True)
class RlsState:
    """Parameter vector, covariance, and forgetting factor of one tracked model."""

    theta: np.ndarray
    P: np.ndarray
    lam: float

    def __post_init__(self) -> None:
        if not 0.0 < self.lam <= 1.0:
            raise ValueError(f"forgetting factor must be in (0, 1], got {self.lam}")
        d = self.theta.shape[0]
        if self.theta.shape != (d,) or self.P.shape != (d, d):
            raise ValueError(
                f"shape mismatch: theta {self.theta.shape}, P {self.P.shape}"
            )

    @classmethod
    def initial(
        cls,
        dim: int,
        lam: float,
        p0_scale: float = 100.0,
        theta0: Sequence[float] | None = None,
    ) -> "RlsState":
        theta = np.zeros(dim) if theta0 is None else np.asarray(theta0, dtype=float)
        return cls(theta=theta, P=p0_scale * np.eye(dim), lam=lam)


def rls_update(state: RlsState, phi: np.ndarray, y: float) -> RlsState:
    """One recursive least-squares step with forgetting.

    k = P phi / (lam + phi' P phi); theta += k (y - phi' theta);
    P <- (P - k phi' P) / lam. The covariance is re-symmetrized to keep it
    positive definite under roundoff.
    """
    phi = np.asarray(phi, dtype=float)
    if phi.shape != state.theta.shape:
        raise ValueError(f"feature dim {phi.shape} != parameter dim {state.theta.shape}")
    if not np.all(np.isfinite(phi)) or not math.isfinite(y):
        raise ValueError("non-finite RLS input")
    P_phi = state.P @ phi
    k = P_phi / (state.lam + phi @ P_phi)
    theta = state.theta + k * (y - phi @ state.theta)
    P = (state.P - np.outer(k, P_phi)) / state.lam
    P = 0.5 * (P + P.T)
    return RlsState(theta=theta, P=P, lam=state.lam)


def rls_predict(state: RlsState, phi: np.ndarray) -> float:
    """Point prediction phi' theta."""
    phi = np.asarray(phi, dtype=float)
    if phi.shape != state.theta.shape:
        raise ValueError(f"feature dim {phi.shape} != parameter dim {state.theta.shape}")
    return float(phi @ state.theta)


def empirical_quantile(values: Sequence[float], level: float) -> float:
    """Left-continuous empirical quantile: inf{p : (1/n) #{v <= p} >= level}.

    Always returns a member of ``values``; for level = 0 this is the
    minimum, for level = 1 the maximum.
    """
    if not 0.0 <= level <= 1.0:
        raise ValueError(f"quantile level must be in [0, 1], got {level}")
    arr = np.sort(np.asarray(values, dtype=float))
    n = arr.size
    if n == 0:
        raise ValueError("no values to take a quantile of")
    ranks = np.arange(1, n + 1) / n
    idx = int(np.searchsorted(ranks, level, side="left"))
    return float(arr[min(idx, n - 1)])


def baseline_quantile_policy(
    demand_history: Sequence[float], alpha: float, stock: float, w_max: float
) -> float:
    """Order up to the empirical (1-alpha)-quantile of past demand.

    Used to generate pretraining data. With no history yet, orders up to
    capacity (most conservative). The order is capped at w_max - stock.
    """
    if len(demand_history) == 0:
        return w_max - stock
    q = empirical_quantile(demand_history, 1.0 - alpha)
    return min(max(0.0, q - stock), w_max - stock)


@dataclass(frozen=True)
class DemandFeatures:
    """ARX feature map [1, W[t-1..t-d_w], X[t], X[t-1..t-d_x]].

    Lags reaching before the first recorded step are filled with zero.
    """

    demand_lags: int
    stock_lags: int

    @property
    def dim(self) -> int:
        return 1 + self.demand_lags + 1 + self.stock_lags

    def vector(self, log: HistoryLog, t: int) -> np.ndarray:
        phi = np.empty(self.dim)
        phi[0] = 1.0
        for i in range(self.demand_lags):
            phi[1 + i] = log.demand_at(t - 1 - i)
        base = 1 + self.demand_lags
        for i in range(self.stock_lags + 1):
            phi[base + i] = log.stock_at(t - i)
        return phi


@dataclass(frozen=True)
class CostFeatures:
    """Horizon-cost AR feature map with optional seasonal Fourier pairs.

    phi(t) = [1, C[t-H-(order-1)], ..., C[t-H], sin(2 pi t / p), cos(2 pi t / p), ...]
    listing the oldest cost lag first. Horizon costs from before the
    evaluation phase (t < 0) come from a different policy and are treated
    as missing; missing lags are filled with zero.
    """

    ar_order: int
    horizon: int
    fourier_periods: tuple[int, ...] = ()

    @property
    def dim(self) -> int:
        return 1 + self.ar_order + 2 * len(self.fourier_periods)

    def vector(self, log: HistoryLog, t: int) -> np.ndarray:
        phi = np.empty(self.dim)
        phi[0] = 1.0
        for i in range(self.ar_order):
            tau = t - self.horizon - (self.ar_order - 1) + i
            value = log.horizon_cost(tau, self.horizon) if tau >= 0 else None
            phi[1 + i] = 0.0 if value is None else value
        base = 1 + self.ar_order
        for j, period in enumerate(self.fourier_periods):
            angle = 2.0 * math.pi * t / period
            phi[base + 2 * j] = math.sin(angle)
            phi[base + 2 * j + 1] = math.cos(angle)
        return phi
