"""Online prediction intervals for the policy's H-step operating cost.

Each step emits an interval for the cost over the next H steps. A nominal
interval (quantiles of past prediction residuals around a tracked point
predictor) is widened or shrunk by a gain q driven by an error process that
counts both resolved miscoverages and *potential* ones: still-pending
intervals from the last H-1 steps that are not the full interval [0, cap].
Saturation (q = +inf) emits the full interval, which can neither miscover
nor count as a potential event, so the error process obeys its bound and
the resolved-coverage fraction is at least 1 - beta for any demand process
and any nominal interval generator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bounds import ErrorBound, inference_gain
from .predict import empirical_quantile


@dataclass(frozen=True)
class CostInterval:
    """A prediction interval within [0, cap].

    ``is_full`` marks, structurally, intervals known to be the whole range
    [0, cap]: the no-data fallback, saturation, and a full nominal widened
    by q >= 0. ``is_empty`` marks intervals inverted by a negative q
    (lo > hi); they count as miscoverage on resolution.
    """

    lo: float
    hi: float
    is_full: bool = False
    is_empty: bool = False

    def __post_init__(self) -> None:
        if self.is_full and self.is_empty:
            raise ValueError("interval cannot be both full and empty")
        if self.is_empty != (self.lo > self.hi):
            raise ValueError("is_empty inconsistent with endpoints")

    def contains(self, value: float) -> bool:
        if self.is_empty:
            return False
        return self.lo <= value <= self.hi


def full_interval(cap: float) -> CostInterval:
    return CostInterval(lo=0.0, hi=cap, is_full=True)


def nominal_interval(
    point_prediction: float,
    residuals: list[float],
    beta: float,
    cap: float,
) -> CostInterval:
    """Quantile-based nominal interval around a point cost prediction.

    [c + Q(beta/2), c + Q(1 - beta/2)] over residuals C[tau] - c_hat[tau],
    clipped into the a-priori range [0, cap]. With no resolved residuals
    yet, falls back to the full interval.
    """
    if not residuals:
        return full_interval(cap)
    lo = point_prediction + empirical_quantile(residuals, beta / 2.0)
    hi = point_prediction + empirical_quantile(residuals, 1.0 - beta / 2.0)
    lo = min(max(lo, 0.0), cap)
    hi = min(max(hi, 0.0), cap)
    return CostInterval(lo=lo, hi=hi)


def adjust_interval(nominal: CostInterval, q: float, cap: float) -> CostInterval:
    """Apply the gain: [max(0, lo - q), min(hi + q, cap)].

    q = +inf yields the full interval. A negative q can invert the
    endpoints; the result is then flagged empty. The nominal may itself be
    inverted (an adversarial degenerate predictor); a large enough q
    un-inverts it.
    """
    if min(nominal.lo, nominal.hi) < 0.0 or max(nominal.lo, nominal.hi) > cap:
        raise ValueError(f"nominal interval endpoints outside [0, {cap}]")
    if math.isinf(q):
        return full_interval(cap)
    lo = max(0.0, nominal.lo - q)
    hi = min(nominal.hi + q, cap)
    if lo > hi:
        return CostInterval(lo=lo, hi=hi, is_empty=True)
    return CostInterval(lo=lo, hi=hi, is_full=nominal.is_full and q >= 0.0)


@dataclass
class _Pending:
    interval: CostInterval


@dataclass
class _Resolved:
    interval: CostInterval
    miscovered: bool


class MiscoverageLedger:
    """Tracks emitted intervals and the observed-plus-potential error count.

    At step t the error count is
    #{tau <= t - H : realized cost not in interval[tau]}            (observed)
    + #{t - H < tau < t  : interval[tau] emitted and not full}      (potential)
    which grows by at most one per step and cannot grow on steps that emit
    the full interval.
    """

    def __init__(self, horizon: int):
        self.horizon = horizon
        self._pending: dict[int, _Pending] = {}
        self._resolved: dict[int, _Resolved] = {}
        self.observed_miscoverages = 0
        self._max_resolved = None

    def register(self, t: int, interval: CostInterval) -> None:
        if t in self._pending or t in self._resolved:
            raise ValueError(f"interval for step {t} already registered")
        self._pending[t] = _Pending(interval)

    def resolve(self, t: int, realized_cost: float) -> bool:
        """Score the pending interval at t; returns True on miscoverage."""
        if t in self._resolved:
            raise ValueError(f"step {t} already resolved")
        if t not in self._pending:
            raise ValueError(f"no pending interval for step {t}")
        interval = self._pending.pop(t).interval
        miscovered = not interval.contains(realized_cost)
        self._resolved[t] = _Resolved(interval, miscovered)
        if miscovered:
            self.observed_miscoverages += 1
        if self._max_resolved is None or t > self._max_resolved:
            self._max_resolved = t
        return miscovered

    def error_count(self, t: int) -> int:
        """Observed plus potential miscoverage events entering step t's gain."""
        if self._max_resolved is None or self._max_resolved <= t - self.horizon:
            # under the run protocol every resolved step is already <= t - H
            observed = self.observed_miscoverages
        else:
            observed = sum(
                1
                for tau, r in self._resolved.items()
                if tau <= t - self.horizon and r.miscovered
            )
        potential = sum(
            1
            for tau, p in self._pending.items()
            if t - self.horizon < tau < t and not p.interval.is_full
        )
        return observed + potential

    @property
    def resolved_count(self) -> int:
        return len(self._resolved)


class CostInferenceEngine:
    """Drives one run's interval stream: predict, adjust, resolve.

    ``point_predictor(t) -> float`` supplies the nominal center; tests may
    substitute adversarial nominal generators via ``nominal_override``.
    """

    def __init__(
        self,
        horizon: int,
        beta: float,
        cap: float,
        bound: ErrorBound,
        nominal_override=None,
    ):
        self.horizon = horizon
        self.beta = beta
        self.cap = cap
        self.bound = bound
        self.ledger = MiscoverageLedger(horizon)
        self.residuals: list[float] = []
        self._nominal_override = nominal_override

    def compute_q(self, t: int) -> tuple[int, float]:
        """Error count and gain value q entering the interval at step t."""
        errors = self.ledger.error_count(t)
        return errors, inference_gain(errors, self.bound(t))

    def emit(self, t: int, point_prediction: float) -> tuple[CostInterval, int, float]:
        """Emit the adjusted interval for the horizon cost starting at t."""
        if self._nominal_override is not None:
            nominal = self._nominal_override(t, point_prediction)
        else:
            nominal = nominal_interval(
                point_prediction, self.residuals, self.beta, self.cap
            )
        errors, q = self.compute_q(t)
        interval = adjust_interval(nominal, q, self.cap)
        self.ledger.register(t, interval)
        return interval, errors, q

    def resolve(self, t: int, realized_cost: float, point_prediction: float) -> bool:
        """Score the interval at t and bank its residual for future quantiles."""
        miscovered = self.ledger.resolve(t, realized_cost)
        self.residuals.append(realized_cost - point_prediction)
        return miscovered
