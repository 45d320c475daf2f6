import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from evobandit.core import (
    ArmPosterior,
    RandomAgent,
    RandomFixedAgent,
    ThompsonAgent,
    TSAgent,
    UCB1Agent,
    UCB1State,
    beta_sample,
    random_select_action,
    ts_select_action,
    ts_update,
    ucb1_select_action,
    ucb1_update,
)


class TestArmPosterior:
    def test_defaults_are_flat_prior(self):
        p = ArmPosterior()
        assert (p.s, p.f) == (1.0, 1.0)
        assert p.mean == 0.5

    @pytest.mark.parametrize("s,f", [(0, 1), (1, 0), (-1, 1), (1, -0.5)])
    def test_nonpositive_parameters_rejected(self, s, f):
        with pytest.raises(ValueError):
            ArmPosterior(s=s, f=f)

    @given(st.floats(0.01, 100), st.floats(0.01, 100))
    def test_mean_in_unit_interval(self, s, f):
        assert 0.0 < ArmPosterior(s=s, f=f).mean < 1.0

    def test_beta_sample_range(self):
        rng = np.random.default_rng(0)
        p = ArmPosterior(s=3, f=7)
        draws = [beta_sample(p, rng) for _ in range(200)]
        assert all(0.0 <= d <= 1.0 for d in draws)
        # mean of Beta(3,7) is 0.3; loose Monte Carlo check
        assert abs(np.mean(draws) - 0.3) < 0.05


class TestThompson:
    def test_fresh_has_flat_arms(self):
        agent = TSAgent.fresh(4)
        assert agent.n_arms == 4
        assert all((a.s, a.f) == (1.0, 1.0) for a in agent.arms)

    def test_fresh_rejects_zero_arms(self):
        with pytest.raises(ValueError):
            TSAgent.fresh(0)

    def test_select_matches_manual_vector_draw(self):
        # the draw-order contract: one beta draw per arm, ascending index
        agent = TSAgent.fresh(5)
        ts_update(agent, 2, 1.0)
        ts_update(agent, 2, 1.0)
        a = ts_select_action(agent, np.random.default_rng(42))
        rng = np.random.default_rng(42)
        theta = rng.beta(
            np.array([p.s for p in agent.arms]), np.array([p.f for p in agent.arms])
        )
        assert a == int(np.argmax(theta))

    def test_update_accumulates(self):
        agent = TSAgent.fresh(3)
        ts_update(agent, 1, 1.0)
        ts_update(agent, 1, 0.0)
        assert (agent.arms[1].s, agent.arms[1].f) == (2.0, 2.0)
        assert (agent.arms[0].s, agent.arms[0].f) == (1.0, 1.0)

    def test_update_rejects_bad_arm_and_reward(self):
        agent = TSAgent.fresh(3)
        with pytest.raises(IndexError):
            ts_update(agent, 3, 1.0)
        with pytest.raises(ValueError):
            ts_update(agent, 0, 1.5)

    @given(st.integers(1, 20), st.integers(0, 2**32 - 1))
    def test_selected_arm_always_valid(self, k, seed):
        agent = TSAgent.fresh(k)
        assert 0 <= ts_select_action(agent, np.random.default_rng(seed)) < k


class TestUCB1:
    def test_plays_every_arm_once_first(self):
        state = UCB1State.fresh(3)
        seen = []
        for _ in range(3):
            a = ucb1_select_action(state)
            seen.append(a)
            ucb1_update(state, a, 0.0)
        assert sorted(seen) == [0, 1, 2]

    def test_prefers_higher_mean_after_warmup(self):
        state = UCB1State.fresh(2)
        ucb1_update(state, 0, 1.0)
        ucb1_update(state, 1, 0.0)
        # identical counts, arm 0 has the better mean and wins
        assert ucb1_select_action(state) == 0

    def test_bonus_formula(self):
        state = UCB1State.fresh(2)
        for arm, r in [(0, 1.0), (1, 0.0), (0, 0.0)]:
            ucb1_update(state, arm, r)
        vals = [
            state.reward_sum[a] / state.pull_count[a]
            + math.sqrt(2 * math.log(state.t) / state.pull_count[a])
            for a in range(2)
        ]
        assert ucb1_select_action(state) == int(np.argmax(vals))


class TestWrappers:
    def test_thompson_wrapper_deterministic(self):
        a1 = ThompsonAgent.create(5, seed=9)
        a2 = ThompsonAgent.create(5, seed=9)
        seq1 = [a1.select() for _ in range(20)]
        seq2 = [a2.select() for _ in range(20)]
        assert seq1 == seq2

    def test_random_agent_spread(self):
        agent = RandomAgent.create(4, seed=1)
        picks = {agent.select() for _ in range(200)}
        assert picks == {0, 1, 2, 3}

    def test_random_fixed_never_moves(self):
        agent = RandomFixedAgent.create(7, seed=5)
        first = agent.select()
        agent.update(first, 0.0)
        assert all(agent.select() == first for _ in range(20))

    def test_ucb1_wrapper_roundtrip(self):
        agent = UCB1Agent.create(3)
        for _ in range(9):
            a = agent.select()
            agent.update(a, 1.0)
        assert sum(agent.state.pull_count) == 9

    def test_random_select_rejects_empty(self):
        with pytest.raises(ValueError):
            random_select_action(0, np.random.default_rng(0))
