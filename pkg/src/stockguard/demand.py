"""Seeded demand processes behind one generator contract.

Every generator implements ``draw(t, stock, order) -> demand``. The stock
and the just-published order are visible to the process, which lets demand
depend on the system state (feedback) or act adversarially; most variants
ignore them. Emitted demand stays in [0, w_max). Identical seeds and
identical stock inputs reproduce identical sequences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Protocol, Sequence

import numpy as np


class DemandGenerator(Protocol):
    def draw(self, t: int, stock: float, order: float) -> float: ...


@dataclass
class SirState:
    """Population fractions of the epidemic demand model."""

    susceptible: float = 0.999
    infected: float = 0.001
    removed: float = 0.0


class PeriodicDemand:
    """Seasonal demand with Gaussian shocks, clipped to [0, 50].

    W[t] = clip(20 + 20 sin(2 pi t / 50) + e, 0, 50), e ~ N(0, 1).
    """

    def __init__(self, seed: int):
        self._rng = np.random.default_rng(seed)

    def draw(self, t: int, stock: float, order: float) -> float:
        noise = self._rng.normal(0.0, 1.0)
        raw = 20.0 + 20.0 * math.sin(2.0 * math.pi * t / 50.0) + noise
        return min(max(raw, 0.0), 50.0)


class SirDemand:
    """Spiking demand proportional to the infected share of a stochastic
    susceptible-infected-removed process: W = 50 * I.

    Each step, with 3% probability the population loses immunity and 0.1%
    gets infected; infection spreads at rate 0.5 and recovers at rate 0.2.
    """

    def __init__(self, seed: int, state: SirState | None = None):
        self._rng = np.random.default_rng(seed)
        self.state = state if state is not None else SirState()

    def draw(self, t: int, stock: float, order: float) -> float:
        _, new_state = sir_step(self.state, float(self._rng.random() < 0.03))
        self.state = new_state
        return 50.0 * new_state.infected


def sir_step(state: SirState, shock: float) -> tuple[float, SirState]:
    """Advance the epidemic one step; returns (demand, new state)."""
    s_mid = state.susceptible + (state.removed - 0.001) * shock
    i_mid = state.infected + 0.001 * shock
    s_new = s_mid - 0.5 * s_mid * i_mid
    i_new = i_mid + 0.5 * s_mid * i_mid - 0.2 * i_mid
    r_new = (1.0 - shock) * state.removed + 0.2 * (state.infected + 0.001 * shock)
    i_new = max(i_new, 0.0)
    new_state = SirState(susceptible=s_new, infected=i_new, removed=r_new)
    return 50.0 * i_new, new_state


class FeedbackDemand:
    """Demand tracking the previous step's stock level:
    W[t] = min(5 + X[t-1] + e, 49.999), e ~ chi-squared(1).

    The first draw uses the stock passed at that call (no earlier stock
    exists).
    """

    def __init__(self, seed: int):
        self._rng = np.random.default_rng(seed)
        self._prev_stock: float | None = None

    def draw(self, t: int, stock: float, order: float) -> float:
        lagged = stock if self._prev_stock is None else self._prev_stock
        self._prev_stock = stock
        noise = self._rng.chisquare(1)
        return min(5.0 + lagged + noise, 49.999)


class AdversarialDemand:
    """Worst-case bounded demand that watches the published order.

    Picks W in {0, w_max - eps} to force the next stock at or below the
    critical threshold whenever the large demand achieves that; otherwise
    the choice is a coin flip. Used to stress the deterministic
    service-level guarantee.
    """

    def __init__(self, seed: int, w_max: float = 50.0, x_c: float = 0.0,
                 eps: float = 1e-3):
        self._rng = np.random.default_rng(seed)
        self.w_max = w_max
        self.x_c = x_c
        self.eps = eps

    def draw(self, t: int, stock: float, order: float) -> float:
        big = self.w_max - self.eps
        if stock + order - big <= self.x_c:
            return big
        return big if self._rng.random() < 0.5 else 0.0


class SeriesDemand:
    """Replays a recorded demand series (e.g. Elec2) in order."""

    def __init__(self, values: Sequence[float]):
        self._values = np.asarray(values, dtype=float)
        self._i = 0

    @property
    def remaining(self) -> int:
        return len(self._values) - self._i

    def draw(self, t: int, stock: float, order: float) -> float:
        if self._i >= len(self._values):
            raise IndexError("demand series exhausted")
        value = float(self._values[self._i])
        self._i += 1
        return value
