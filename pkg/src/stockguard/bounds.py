"""Error bound functions and the nonlinear gains that enforce them.

An *error process* E is an integer counter with E[0] = 0 that grows by at
most one per step. An *error bound* b(t) is any nondecreasing function with
0 <= b(t) <= rate * horizon. A gain g_t(E) is *associated* with b when
E + 1 >= b(t) implies g_t(E) >= g_sat for a saturation level g_sat. If
saturation always prevents the error process from growing, then E[t] <= b(t)
for all t; both certifications in this package reduce to that argument.

Saturation is represented symbolically by ``math.inf`` so callers branch on
it rather than on a floating overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ErrorBound:
    """Piecewise-linear error bound.

    Zero during a burn-in of ``t_star`` steps (when ``t_star > 0``), then
    rising linearly from ``b_star`` to ``rate * horizon`` at ``t = horizon``.
    With ``t_star = 0`` there is no burn-in and the bound starts at
    ``b_star``.
    """

    b_star: float
    t_star: int
    rate: float
    horizon: int

    def __post_init__(self) -> None:
        if not 0.0 <= self.rate <= 1.0:
            raise ValueError(f"rate must be in [0, 1], got {self.rate}")
        if self.horizon < 1:
            raise ValueError(f"horizon must be >= 1, got {self.horizon}")
        if not 0 <= self.t_star < self.horizon:
            raise ValueError(
                f"t_star must be in [0, horizon), got t_star={self.t_star}, "
                f"horizon={self.horizon}"
            )
        if not 0.0 <= self.b_star <= self.cap:
            raise ValueError(
                f"b_star must be in [0, rate*horizon] = [0, {self.cap}], "
                f"got {self.b_star} (the bound would decrease)"
            )

    @property
    def cap(self) -> float:
        """Terminal value rate * horizon; b(t) never exceeds it."""
        return self.rate * self.horizon

    def __call__(self, t: int) -> float:
        if not 0 <= t <= self.horizon:
            raise ValueError(f"t must be in [0, {self.horizon}], got {t}")
        if self.t_star > 0 and t <= self.t_star:
            return 0.0
        frac = max(0, t - self.t_star) / (self.horizon - self.t_star)
        return self.b_star + (self.cap - self.b_star) * frac


def policy_bound(T: int, alpha: float) -> ErrorBound:
    """Error bound backing the certified order policy: b_star=2, no burn-in."""
    if alpha * T < 2.0:
        raise ValueError(
            f"alpha*T must be >= 2 for the policy gain, got {alpha * T}"
        )
    return ErrorBound(b_star=2.0, t_star=0, rate=alpha, horizon=T)


def inference_bound(T: int, H: int, beta: float, t_star: int) -> ErrorBound:
    """Error bound for cost inference over the T - H + 1 resolvable horizons.

    Starts at b_star = H (every pending interval may still miscover) after a
    problem-dependent burn-in.
    """
    return ErrorBound(b_star=float(H), t_star=t_star, rate=beta, horizon=T - H + 1)


def _tan_half_pi(ratio: float) -> float:
    """tan(pi/2 * ratio) for ratio in [-1, 1), +inf at and beyond ratio = 1."""
    if ratio >= 1.0:
        return math.inf
    return math.tan(0.5 * math.pi * ratio)


def policy_gain(errors: int, t: int, T: int, alpha: float) -> float:
    """Nonlinear integral gain of the certified order policy.

    Returns tan(pi/2 * r) with r = (errors + 1) / b(t) where b is the
    default policy bound, and +inf once r leaves [0, 1). Saturation (+inf)
    forces an order up to capacity.
    """
    if errors < 0:
        raise ValueError(f"error count must be >= 0, got {errors}")
    b_t = policy_bound(T, alpha)(t)
    ratio = (errors + 1) / b_t
    if ratio < 0.0:
        return math.inf
    return _tan_half_pi(ratio)


def inference_gain(errors: int, bound_value: float) -> float:
    """Interval-widening gain for cost inference.

    Returns tan(pi/2 * (2*(errors+1)/b - 1)) while errors + 1 <= b; +inf
    when b = 0 (burn-in) or the count reaches b. Negative while the error
    count is below b/2 - 1, which *shrinks* the nominal interval.
    """
    if errors < 0:
        raise ValueError(f"error count must be >= 0, got {errors}")
    if bound_value < 0.0:
        raise ValueError(f"bound value must be >= 0, got {bound_value}")
    if bound_value == 0.0 or errors + 1 > bound_value:
        return math.inf
    return _tan_half_pi(2.0 * (errors + 1) / bound_value - 1.0)


def check_association(
    bound: ErrorBound,
    gain,
    saturation: float,
    max_errors: int | None = None,
) -> None:
    """Verify that ``gain`` is an associated gain of ``bound``.

    Checks, on the full integer grid of steps and every relevant error
    count, that E + 1 >= b(t) implies gain(E, t) >= saturation. Raises
    ValueError on the first violation.
    """
    if max_errors is None:
        max_errors = int(math.ceil(bound.cap)) + 2
    for t in range(bound.horizon + 1):
        b_t = bound(t)
        for errors in range(max_errors + 1):
            if errors + 1 >= b_t and gain(errors, t) < saturation:
                raise ValueError(
                    f"gain not associated with bound: E={errors}, t={t}, "
                    f"b(t)={b_t}, gain={gain(errors, t)} < {saturation}"
                )


def lemma1_oracle(
    bound: ErrorBound,
    gain,
    saturation: float,
    trials: int,
    seed: int = 0,
) -> bool:
    """Brute-force check that saturation-stopped error processes obey b(t).

    Simulates random error processes that can grow only while
    gain(E, t) < saturation, and asserts E[t] <= b(t) <= rate * horizon at
    every step of every trial. ``gain`` must be associated with ``bound``
    (checked up front).

    Returns True iff no violation occurred across all trials.
    """
    check_association(bound, gain, saturation)
    rng = np.random.default_rng(seed)
    cap = bound.cap
    for _ in range(trials):
        errors = 0
        for t in range(bound.horizon):
            if not errors <= bound(t) <= cap:
                return False
            if gain(errors, t) < saturation:
                errors += int(rng.integers(0, 2))
        if not errors <= bound(bound.horizon) <= cap:
            return False
    return True
