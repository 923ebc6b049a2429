"""Domain types, inventory dynamics, and per-step cost accounting.

Stock follows ``X[t+1] = max(0, X[t] + U[t] - W[t])``: an order ``U[t]`` is
placed at time ``t``, then an unknown demand ``W[t]`` in ``[0, w_max)`` is
consumed. A step is *critical* when the stock is at or below the safety
threshold ``x_c``. The period cost is purchase plus holding,
``c[t] = U[t] + h * X[t]``, and the horizon cost ``C[t]`` sums the next
``H`` period costs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence


@dataclass(frozen=True)
class SystemConfig:
    """All run parameters for one closed-loop simulation.

    Attributes:
        T: evaluation horizon length in steps.
        H: cost horizon in steps (at least 2).
        alpha: tolerated critical-event rate; target service level is 1 - alpha.
        beta: tolerated miscoverage rate; target coverage is 1 - beta.
        w_max: strict upper bound on per-step demand.
        x_c: critical stock threshold (stock <= x_c counts as critical).
        h: holding cost per item per step.
        T_hist: pretraining window length in steps.
        seed: RNG seed for the demand process.
        x0: stock at the first simulated step (start of pretraining when
            T_hist > 0). Unspecified by the problem setting; defaults to 0.
    """

    T: int
    H: int
    alpha: float
    beta: float
    w_max: float
    x_c: float = 0.0
    h: float = 1.0
    T_hist: int = 0
    seed: int = 0
    x0: float = 0.0

    def __post_init__(self) -> None:
        if self.T < 1:
            raise ValueError(f"T must be >= 1, got {self.T}")
        if self.H < 2:
            raise ValueError(f"H must be >= 2, got {self.H}")
        if self.T < self.H:
            raise ValueError(f"T must be >= H, got T={self.T}, H={self.H}")
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must be in [0, 1], got {self.alpha}")
        if not 0.0 <= self.beta <= 1.0:
            raise ValueError(f"beta must be in [0, 1], got {self.beta}")
        if self.w_max <= 0.0:
            raise ValueError(f"w_max must be positive, got {self.w_max}")
        if self.x_c < 0.0:
            raise ValueError(f"x_c must be >= 0, got {self.x_c}")
        if self.h <= 0.0:
            raise ValueError(f"h must be positive, got {self.h}")
        if self.T_hist < 0:
            raise ValueError(f"T_hist must be >= 0, got {self.T_hist}")
        # The default policy error bound rises from 2 to alpha*T; it must
        # not decrease, so alpha*T >= 2 is required.
        if self.alpha * self.T < 2.0:
            raise ValueError(
                f"alpha*T must be >= 2 for the certified policy, got "
                f"{self.alpha * self.T}"
            )
        if not 0.0 <= self.x0 <= self.w_max:
            raise ValueError(f"x0 must be in [0, w_max], got {self.x0}")

    @property
    def cost_cap(self) -> float:
        """A-priori upper bound H * w_max * (1 + h) on any horizon cost."""
        return self.H * self.w_max * (1.0 + self.h)


@dataclass
class InventoryState:
    """Mutable per-run state: current step, stock, and critical-event count."""

    t: int = 0
    stock: float = 0.0
    critical_events: int = 0

    def __post_init__(self) -> None:
        if self.stock < 0.0:
            raise ValueError(f"stock must be >= 0, got {self.stock}")
        if self.critical_events < 0:
            raise ValueError("critical_events must be >= 0")


class HistoryLog:
    """Append-only record of the closed-loop trajectory.

    Holds the information set available to predictors: stocks, orders,
    demands, and period costs, indexed by absolute step. Steps may start
    negative (pretraining). Lookups before the first recorded step return
    a zero fill so early feature vectors stay well-defined.
    """

    def __init__(self, start: int = 0):
        self.start = start
        self.stock: list[float] = []
        self.orders: list[float] = []
        self.demands: list[float] = []
        self.costs: list[float] = []

    @property
    def next_step(self) -> int:
        """Absolute index of the next transition to be recorded."""
        return self.start + len(self.orders)

    def push_stock(self, x: float) -> None:
        if len(self.stock) != len(self.orders):
            raise ValueError("stock already recorded for the current step")
        self.stock.append(float(x))

    def push_transition(self, order: float, demand: float, cost: float) -> None:
        """Record the (order, demand, cost) triple closing the current step."""
        if len(self.stock) != len(self.orders) + 1:
            raise ValueError("record the step's stock before its transition")
        self.orders.append(float(order))
        self.demands.append(float(demand))
        self.costs.append(float(cost))

    def _get(self, seq: Sequence[float], t: int, fill: float) -> float:
        i = t - self.start
        if i < 0:
            return fill
        if i >= len(seq):
            raise IndexError(f"step {t} not recorded yet")
        return seq[i]

    def stock_at(self, t: int, fill: float = 0.0) -> float:
        return self._get(self.stock, t, fill)

    def demand_at(self, t: int, fill: float = 0.0) -> float:
        return self._get(self.demands, t, fill)

    def cost_at(self, t: int, fill: float = 0.0) -> float:
        return self._get(self.costs, t, fill)

    def horizon_cost(self, t: int, horizon: int) -> Optional[float]:
        """Sum of the ``horizon`` period costs starting at step ``t``.

        Defined exactly when all of c[t] .. c[t+horizon-1] are recorded;
        returns None otherwise.
        """
        lo = t - self.start
        hi = lo + horizon
        if lo < 0 or hi > len(self.costs):
            return None
        return float(sum(self.costs[lo:hi]))


def step_dynamics(stock: float, order: float, demand: float) -> float:
    """Advance the stock one step: max(0, stock + order - demand)."""
    if stock < 0.0:
        raise ValueError(f"stock must be >= 0, got {stock}")
    if order < 0.0:
        raise ValueError(f"order must be >= 0, got {order}")
    if demand < 0.0:
        raise ValueError(f"demand must be >= 0, got {demand}")
    return max(0.0, stock + order - demand)


def period_cost(order: float, stock: float, holding_rate: float) -> float:
    """Operating cost of one period: purchase plus holding, U + h*X."""
    if order < 0.0:
        raise ValueError(f"order must be >= 0, got {order}")
    if stock < 0.0:
        raise ValueError(f"stock must be >= 0, got {stock}")
    if holding_rate <= 0.0:
        raise ValueError(f"holding rate must be positive, got {holding_rate}")
    return order + holding_rate * stock


def horizon_cost(costs: Sequence[float], horizon: int) -> float:
    """Sum exactly ``horizon`` nonnegative period costs."""
    if len(costs) != horizon:
        raise ValueError(f"expected {horizon} period costs, got {len(costs)}")
    if any(c < 0.0 for c in costs):
        raise ValueError("period costs must be >= 0")
    if any(not math.isfinite(c) for c in costs):
        raise ValueError("period costs must be finite")
    return float(sum(costs))


def is_critical(stock: float, x_c: float = 0.0) -> bool:
    """Whether the stock level is at or below the critical threshold."""
    return stock <= x_c
