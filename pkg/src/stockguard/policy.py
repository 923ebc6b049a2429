"""Order policies: the certified policy and uncertified baselines.

Every policy output is capped at w_max - stock, so the stock can never
exceed w_max and any admissible policy stays admissible under the cap.
"""

from __future__ import annotations

import math

from .bounds import policy_gain


def gain_order(w_hat: float, stock: float, gain: float, w_max: float) -> float:
    """Order min(max(0, w_hat - stock + gain), w_max - stock).

    A saturated gain (+inf) orders up to capacity.
    """
    cap = w_max - stock
    if math.isinf(gain):
        return cap
    return min(max(0.0, w_hat - stock + gain), cap)


def certified_order(
    w_hat: float,
    stock: float,
    errors: int,
    t: int,
    T: int,
    alpha: float,
    w_max: float,
) -> float:
    """Order with nonlinear integral action on past critical events.

    Applies ``gain_order`` with the policy gain evaluated at the cumulative
    critical-event count through the current step. Saturation orders up to
    capacity, which guarantees the next step cannot be critical while
    demand stays below w_max; this ensures a service level of at least
    1 - alpha over T steps for any bounded demand sequence.
    """
    if not 0.0 <= stock <= w_max:
        raise ValueError(f"stock must be in [0, w_max], got {stock}")
    if errors < 0:
        raise ValueError(f"error count must be >= 0, got {errors}")
    return gain_order(w_hat, stock, policy_gain(errors, t, T, alpha), w_max)


def trivial_order(stock: float, w_max: float) -> float:
    """Always order up to capacity. Admissible but wasteful."""
    if not 0.0 <= stock <= w_max:
        raise ValueError(f"stock must be in [0, w_max], got {stock}")
    return w_max - stock


def uncertified_order(w_hat: float, stock: float) -> float:
    """Order the predicted lack of stock, with no service-level guarantee."""
    if stock < 0.0:
        raise ValueError(f"stock must be >= 0, got {stock}")
    return max(0.0, w_hat - stock)
