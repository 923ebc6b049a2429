import numpy as np
import pytest

from stockguard.demand import (
    AdversarialDemand,
    FeedbackDemand,
    PeriodicDemand,
    SeriesDemand,
    SirDemand,
    SirState,
    sir_step,
)


class _FixedNoise:
    """Stand-in RNG feeding predetermined draws."""

    def __init__(self, values):
        self._values = list(values)

    def normal(self, loc, scale):
        return self._values.pop(0)

    def chisquare(self, dof):
        return self._values.pop(0)


class TestPeriodicDemand:
    def test_mean_at_origin(self):
        gen = PeriodicDemand(seed=0)
        gen._rng = _FixedNoise([0.0])
        assert gen.draw(0, 0.0, 0.0) == 20.0

    def test_near_peak(self):
        gen = PeriodicDemand(seed=0)
        gen._rng = _FixedNoise([0.0])
        assert gen.draw(13, 0.0, 0.0) == pytest.approx(39.960534568565436)

    def test_clipping(self):
        gen = PeriodicDemand(seed=0)
        gen._rng = _FixedNoise([100.0])
        assert gen.draw(13, 0.0, 0.0) == 50.0

    def test_range_over_many_draws(self):
        gen = PeriodicDemand(seed=1)
        draws = [gen.draw(t, 0.0, 0.0) for t in range(20000)]
        assert all(0.0 <= w <= 50.0 for w in draws)


class TestSirDemand:
    def test_disease_free_fixed_point(self):
        state = SirState(susceptible=1.0, infected=0.0, removed=0.0)
        for _ in range(50):
            demand, state = sir_step(state, shock=0.0)
            assert demand == 0.0
            assert state.infected == 0.0

    def test_hand_evaluation_no_shock(self):
        state = SirState(susceptible=0.9, infected=0.1, removed=0.0)
        demand, new = sir_step(state, shock=0.0)
        assert new.infected == pytest.approx(0.125)
        assert demand == pytest.approx(6.25)

    def test_hand_evaluation_with_shock(self):
        state = SirState(susceptible=0.9, infected=0.0, removed=0.1)
        demand, new = sir_step(state, shock=1.0)
        assert new.infected == pytest.approx(0.0012995)
        assert demand == pytest.approx(0.064975)

    def test_infected_never_negative(self):
        gen = SirDemand(seed=3)
        for t in range(20000):
            gen.draw(t, 0.0, 0.0)
            assert gen.state.infected >= 0.0

    def test_range(self):
        gen = SirDemand(seed=4)
        draws = [gen.draw(t, 0.0, 0.0) for t in range(20000)]
        assert all(0.0 <= w < 50.0 for w in draws)


class TestFeedbackDemand:
    def test_first_draw_uses_current_stock(self):
        gen = FeedbackDemand(seed=0)
        gen._rng = _FixedNoise([0.0])
        assert gen.draw(0, 0.0, 0.0) == 5.0

    def test_tracks_previous_stock(self):
        gen = FeedbackDemand(seed=0)
        gen._rng = _FixedNoise([0.0, 4.0])
        gen.draw(0, 10.0, 0.0)
        # second draw sees the stock passed at the first call
        assert gen.draw(1, 30.0, 0.0) == 19.0

    def test_upper_clip_stays_below_w_max(self):
        gen = FeedbackDemand(seed=0)
        gen._rng = _FixedNoise([0.0])
        assert gen.draw(0, 100.0, 0.0) == 49.999

    def test_range(self):
        gen = FeedbackDemand(seed=5)
        rng = np.random.default_rng(0)
        for t in range(20000):
            w = gen.draw(t, float(rng.uniform(0, 50)), 0.0)
            assert 0.0 <= w < 50.0


class TestAdversarialDemand:
    def test_forces_criticality_when_possible(self):
        gen = AdversarialDemand(seed=0, w_max=50.0)
        # stock + order= 30 <= 49.999 -> big demand wipes the stock
        w = gen.draw(0, 10.0, 20.0)
        assert w == 49.999
        assert max(0.0, 10.0 + 20.0 - w) <= 0.0

    def test_coin_flip_when_not_forcible(self):
        gen = AdversarialDemand(seed=0, w_max=50.0)
        draws = {gen.draw(t, 30.0, 20.0 + 0.1) for t in range(100)}
        assert draws <= {0.0, 49.999}
        assert len(draws) == 2

    def test_range(self):
        gen = AdversarialDemand(seed=1, w_max=50.0)
        for t in range(20000):
            w = gen.draw(t, 25.0, 25.0)
            assert 0.0 <= w < 50.0


class TestSeriesDemand:
    def test_replays_in_order(self):
        gen = SeriesDemand([0.1, 0.5, 0.9])
        assert [gen.draw(t, 0.0, 0.0) for t in range(3)] == [0.1, 0.5, 0.9]

    def test_exhaustion(self):
        gen = SeriesDemand([0.1])
        gen.draw(0, 0.0, 0.0)
        with pytest.raises(IndexError):
            gen.draw(1, 0.0, 0.0)


class TestDeterminism:
    @pytest.mark.parametrize(
        "factory",
        [
            lambda seed: PeriodicDemand(seed),
            lambda seed: SirDemand(seed),
            lambda seed: FeedbackDemand(seed),
            lambda seed: AdversarialDemand(seed),
        ],
    )
    def test_same_seed_same_sequence(self, factory):
        a, b = factory(42), factory(42)
        stocks = np.linspace(0.0, 49.0, 200)
        seq_a = [a.draw(t, float(x), 1.0) for t, x in enumerate(stocks)]
        seq_b = [b.draw(t, float(x), 1.0) for t, x in enumerate(stocks)]
        assert seq_a == seq_b
