import pytest
from hypothesis import given, strategies as st

from stockguard.core import (
    HistoryLog,
    SystemConfig,
    horizon_cost,
    is_critical,
    period_cost,
    step_dynamics,
)

finite = st.floats(min_value=0.0, max_value=1e6, allow_nan=False)


class TestStepDynamics:
    def test_rectification_at_zero(self):
        assert step_dynamics(10, 5, 20) == 0.0

    def test_plain_balance(self):
        assert step_dynamics(10, 0, 3) == 7.0

    def test_identity_case(self):
        assert step_dynamics(0, 0, 0) == 0.0

    @pytest.mark.parametrize("x,u,w", [(-1, 0, 0), (0, -1, 0), (0, 0, -1)])
    def test_negative_inputs_rejected(self, x, u, w):
        with pytest.raises(ValueError):
            step_dynamics(x, u, w)

    @given(finite, finite, finite)
    def test_nonnegative_and_exact(self, x, u, w):
        out = step_dynamics(x, u, w)
        assert out >= 0.0
        if x + u - w >= 0.0:
            assert out == x + u - w

    @given(
        st.floats(min_value=0.0, max_value=50.0, allow_nan=False),
        st.floats(min_value=0.0, max_value=49.999, allow_nan=False),
    )
    def test_capped_order_keeps_stock_below_w_max(self, x, w):
        w_max = 50.0
        assert step_dynamics(x, w_max - x, w) <= w_max


class TestPeriodCost:
    def test_hand_evaluation(self):
        assert period_cost(21, 10, 1.0) == 31.0

    def test_zero_case(self):
        assert period_cost(0, 0, 1.0) == 0.0

    def test_per_period_bound_boundary(self):
        # u = x = w_max saturates the per-period value w_max * (1 + h)
        assert period_cost(50, 50, 1.0) == 100.0

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            period_cost(-1, 0, 1.0)
        with pytest.raises(ValueError):
            period_cost(0, 0, 0.0)


class TestHorizonCost:
    def test_sum(self):
        assert horizon_cost([1, 2, 3], 3) == 6.0

    def test_zero_case(self):
        assert horizon_cost([0.0] * 10, 10) == 0.0

    def test_saturating_the_bound(self):
        # H=10 periods, each at the per-period cap w_max*(1+h) = 100
        assert horizon_cost([100.0] * 10, 10) == 1000.0

    def test_wrong_length(self):
        with pytest.raises(ValueError):
            horizon_cost([1.0, 2.0], 3)

    def test_negative_cost_rejected(self):
        with pytest.raises(ValueError):
            horizon_cost([1.0, -0.5, 2.0], 3)


class TestIsCritical:
    def test_boundary_counts_as_critical(self):
        assert is_critical(0.0, 0.0)

    def test_just_above(self):
        assert not is_critical(0.01, 0.0)

    def test_threshold_generalization(self):
        assert is_critical(3.0, 5.0)


class TestSystemConfig:
    def test_valid(self):
        cfg = SystemConfig(T=300, H=10, alpha=0.05, beta=0.05, w_max=50.0)
        assert cfg.cost_cap == 10 * 50.0 * 2.0

    @pytest.mark.parametrize(
        "patch",
        [
            {"T": 0},
            {"H": 1},
            {"alpha": 1.5},
            {"beta": -0.1},
            {"w_max": 0.0},
            {"x_c": -1.0},
            {"h": 0.0},
            {"T_hist": -1},
            {"alpha": 0.001},  # alpha*T = 0.3 < 2
        ],
    )
    def test_invalid_rejected(self, patch):
        base = dict(T=300, H=10, alpha=0.05, beta=0.05, w_max=50.0)
        base.update(patch)
        with pytest.raises(ValueError):
            SystemConfig(**base)


class TestHistoryLog:
    def test_appends_and_lookup(self):
        log = HistoryLog(start=-2)
        log.push_stock(0.0)
        for t in range(-2, 1):
            log.push_transition(order=1.0 * t, demand=2.0, cost=3.0)
            log.push_stock(5.0 + t)
        assert log.stock_at(-2) == 0.0
        assert log.stock_at(1) == 5.0
        assert log.demand_at(0) == 2.0
        # before the first recorded step: zero fill
        assert log.stock_at(-10) == 0.0
        assert log.demand_at(-3) == 0.0
        with pytest.raises(IndexError):
            log.stock_at(2)

    def test_horizon_cost_defined_exactly_when_complete(self):
        log = HistoryLog()
        log.push_stock(0.0)
        for _ in range(4):
            log.push_transition(1.0, 1.0, 2.0)
            log.push_stock(0.0)
        assert log.horizon_cost(0, 4) == 8.0
        assert log.horizon_cost(1, 4) is None
        assert log.horizon_cost(-1, 2) is None

    def test_transition_requires_stock_first(self):
        log = HistoryLog()
        with pytest.raises(ValueError):
            log.push_transition(0.0, 0.0, 0.0)
        log.push_stock(1.0)
        with pytest.raises(ValueError):
            log.push_stock(2.0)
