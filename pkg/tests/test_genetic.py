import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from evobandit.core import ThompsonAgent
from evobandit.envs import BernoulliMAB
from evobandit.genetic import (
    Genome,
    GTSAgent,
    GTSConfig,
    Population,
    collect_recommendations,
    crossover_fill,
    gts_init,
    gts_step,
    majority_vote,
    mutate,
    sample_fitness,
    select_elites,
    update_aligned,
)


def small_config(**overrides):
    base = dict(population_size=8, mutation_count=3, init_upper=1.5, action_seed=11, ga_seed=12)
    base.update(overrides)
    return GTSConfig(**base)


class TestConfig:
    def test_elite_count_rounding(self):
        assert GTSConfig(population_size=10, selection_ratio=0.5).elite_count == 5
        assert GTSConfig(population_size=5, selection_ratio=0.5).elite_count == 2
        assert GTSConfig(population_size=1, selection_ratio=0.5).elite_count == 1
        assert GTSConfig(population_size=4, selection_ratio=1.0).elite_count == 4

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"population_size": 0},
            {"selection_ratio": 0.0},
            {"selection_ratio": 1.1},
            {"mutation_count": -1},
            {"init_upper": 0.5},
            {"clamp_min": 0.0},
        ],
    )
    def test_validation(self, kwargs):
        with pytest.raises(ValueError):
            GTSConfig(**kwargs)


class TestInit:
    def test_q_shared_by_s_and_f(self):
        cfg = small_config(init_upper=2.0)
        pop = gts_init(cfg, 4, np.random.default_rng(0))
        assert pop.arm_s.shape == (8, 4)
        assert np.array_equal(pop.arm_s, pop.arm_f)
        assert np.all((pop.arm_s >= 1.0) & (pop.arm_s <= 2.0))
        assert np.all(pop.fit_s == 1.0) and np.all(pop.fit_f == 1.0)

    def test_q_equal_one_gives_flat_priors(self):
        pop = gts_init(small_config(init_upper=1.0), 3, np.random.default_rng(0))
        assert np.all(pop.arm_s == 1.0) and np.all(pop.arm_f == 1.0)


class TestVote:
    def test_unique_mode_wins(self):
        rng = np.random.default_rng(0)
        assert majority_vote(np.array([2, 2, 1, 0, 2]), rng) == 2

    def test_tie_lands_in_tied_set(self):
        for seed in range(30):
            a = majority_vote(np.array([0, 0, 3, 3, 1]), np.random.default_rng(seed))
            assert a in (0, 3)

    def test_tie_break_hits_both_sides(self):
        picks = {
            majority_vote(np.array([0, 1]), np.random.default_rng(s)) for s in range(50)
        }
        assert picks == {0, 1}

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            majority_vote(np.array([], dtype=int), np.random.default_rng(0))


class TestAlignedUpdate:
    @given(st.integers(0, 3), st.sampled_from([0.0, 1.0]), st.integers(0, 2**31))
    @settings(max_examples=60)
    def test_only_aligned_members_change(self, a_star, r, seed):
        rng = np.random.default_rng(seed)
        pop = gts_init(small_config(), 4, rng)
        recs = rng.integers(4, size=pop.size)
        out = update_aligned(pop, a_star, r, recs)
        for i in range(pop.size):
            if recs[i] == a_star:
                assert out.arm_s[i, a_star] == pop.arm_s[i, a_star] + r
                assert out.arm_f[i, a_star] == pop.arm_f[i, a_star] + (1 - r)
                assert out.fit_s[i] == pop.fit_s[i] + r
                assert out.fit_f[i] == pop.fit_f[i] + (1 - r)
            else:
                assert np.array_equal(out.arm_s[i], pop.arm_s[i])
                assert np.array_equal(out.arm_f[i], pop.arm_f[i])
                assert out.fit_s[i] == pop.fit_s[i] and out.fit_f[i] == pop.fit_f[i]
            # other arms untouched either way
            mask = np.arange(4) != a_star
            assert np.array_equal(out.arm_s[i, mask], pop.arm_s[i, mask])

    def test_input_population_not_mutated(self):
        pop = gts_init(small_config(), 3, np.random.default_rng(0))
        before = pop.copy()
        update_aligned(pop, 0, 1.0, np.zeros(pop.size, dtype=int))
        assert np.array_equal(pop.arm_s, before.arm_s)
        assert np.array_equal(pop.fit_s, before.fit_s)


class TestSelection:
    def test_descending_with_ties_to_lower_index(self):
        assert select_elites(np.array([0.1, 0.9, 0.9, 0.5]), 3) == [1, 2, 3]
        assert select_elites(np.array([0.5, 0.5, 0.5]), 2) == [0, 1]

    def test_elite_count_bound(self):
        with pytest.raises(ValueError):
            select_elites(np.array([0.1]), 2)

    def test_fitness_samples_within_unit_interval(self):
        pop = gts_init(small_config(), 3, np.random.default_rng(0))
        s = sample_fitness(pop, np.random.default_rng(1))
        assert s.shape == (8,) and np.all((s >= 0) & (s <= 1))


class TestCrossover:
    @given(st.integers(0, 2**31))
    @settings(max_examples=40)
    def test_children_copy_whole_arm_pairs_from_parents(self, seed):
        rng = np.random.default_rng(seed)
        elites = gts_init(small_config(population_size=4, init_upper=3.0), 5, rng)
        pairs = []
        children = crossover_fill(elites, 6, rng, parent_pairs=pairs)
        assert children.size == 6 and len(pairs) == 6
        for c, (pa, pb) in enumerate(pairs):
            for a in range(5):
                pair = (children.arm_s[c, a], children.arm_f[c, a])
                assert pair in (
                    (elites.arm_s[pa, a], elites.arm_f[pa, a]),
                    (elites.arm_s[pb, a], elites.arm_f[pb, a]),
                )

    def test_child_fitness_reset_to_flat(self):
        rng = np.random.default_rng(0)
        elites = gts_init(small_config(population_size=3), 2, rng)
        elites.fit_s[:] = 9.0
        children = crossover_fill(elites, 4, rng)
        assert np.all(children.fit_s == 1.0) and np.all(children.fit_f == 1.0)

    def test_zero_children_is_none(self):
        rng = np.random.default_rng(0)
        elites = gts_init(small_config(population_size=2), 2, rng)
        assert crossover_fill(elites, 0, rng) is None

    def test_blend_mode_interpolates(self):
        rng = np.random.default_rng(3)
        elites = gts_init(small_config(population_size=2, init_upper=5.0), 3, rng)
        children = crossover_fill(elites, 10, rng, blend=True)
        lo = elites.arm_s.min(axis=0) - 1e-9
        hi = elites.arm_s.max(axis=0) + 1e-9
        assert np.all(children.arm_s >= lo) and np.all(children.arm_s <= hi)


class TestMutate:
    @given(st.integers(0, 2**31), st.integers(0, 30))
    @settings(max_examples=40)
    def test_positivity_and_record_count(self, seed, count):
        rng = np.random.default_rng(seed)
        pop = gts_init(small_config(init_upper=1.0), 4, rng)
        records = []
        out = mutate(pop, count, 0.01, rng, records=records)
        assert len(records) == count
        assert np.all(out.arm_s >= 0.01) and np.all(out.arm_f >= 0.01)
        # fitness untouched by mutation
        assert np.array_equal(out.fit_s, pop.fit_s)
        assert np.array_equal(out.fit_f, pop.fit_f)

    def test_deltas_bounded(self):
        rng = np.random.default_rng(0)
        pop = gts_init(small_config(), 3, rng)
        records = []
        mutate(pop, 50, 0.01, rng, records=records)
        for _, _, ds, df in records:
            assert -1.0 <= ds <= 1.0 and -1.0 <= df <= 1.0

    def test_zero_count_is_identity(self):
        rng = np.random.default_rng(0)
        pop = gts_init(small_config(), 3, rng)
        out = mutate(pop, 0, 0.01, rng)
        assert np.array_equal(out.arm_s, pop.arm_s)


class TestStepAndAgent:
    def test_population_size_invariant_over_steps(self):
        cfg = small_config()
        agent = GTSAgent.create(5, cfg)
        rng = np.random.default_rng(0)
        for _ in range(30):
            a = agent.select()
            agent.update(a, float(rng.random() < 0.5))
            assert agent.population.size == cfg.population_size
            assert agent.population.n_arms == 5
            assert np.all(agent.population.arm_s >= cfg.clamp_min)
            assert np.all(agent.population.arm_f >= cfg.clamp_min)

    def test_deterministic_under_fixed_seeds(self):
        rewards = [1.0, 0.0, 1.0, 1.0, 0.0] * 4
        runs = []
        for _ in range(2):
            agent = GTSAgent.create(4, small_config())
            actions = []
            for r in rewards:
                actions.append(agent.select())
                agent.update(actions[-1], r)
            runs.append((actions, agent.population.arm_s.copy()))
        assert runs[0][0] == runs[1][0]
        assert np.array_equal(runs[0][1], runs[1][1])

    def test_gts_step_matches_agent_wrapper(self):
        cfg = small_config()
        agent = GTSAgent.create(3, cfg)
        pop = agent.population.copy()
        action_rng = np.random.default_rng(cfg.action_seed)
        ga_rng = np.random.default_rng(cfg.ga_seed)
        for r in [1.0, 0.0, 1.0]:
            a = agent.select()
            agent.update(a, r)
            pop, trace = gts_step(pop, cfg, lambda _: r, action_rng, ga_rng)
            assert trace.majority_action == a
        assert np.array_equal(pop.arm_s, agent.population.arm_s)
        assert np.array_equal(pop.fit_f, agent.population.fit_f)

    def test_trace_contents(self):
        agent = GTSAgent.create(4, small_config())
        a = agent.select()
        agent.update(a, 1.0)
        trace = agent.last_trace
        assert trace.majority_action == a
        assert len(trace.recommendations) == 8
        assert trace.aligned_ids == [
            i for i, rec in enumerate(trace.recommendations) if rec == a
        ]
        assert len(trace.elite_ids) == 4
        assert len(trace.parent_pairs) == 4
        assert len(trace.mutations) == 3

    def test_update_before_select_rejected(self):
        agent = GTSAgent.create(3, small_config())
        with pytest.raises(RuntimeError):
            agent.update(0, 1.0)

    def test_crossover_disabled_skips_selection(self):
        cfg = small_config(crossover_enabled=False, mutation_count=0)
        agent = GTSAgent.create(3, cfg)
        before = agent.population.copy()
        a = agent.select()
        agent.update(a, 0.0)
        trace = agent.last_trace
        assert trace.elite_ids == list(range(8))
        assert trace.parent_pairs == [] and trace.fitness_samples == []
        # only the aligned update happened
        unchanged = [i for i in range(8) if trace.recommendations[i] != a]
        for i in unchanged:
            assert np.array_equal(agent.population.arm_s[i], before.arm_s[i])


class TestReduction:
    def test_single_member_reduces_to_plain_ts(self):
        # bitwise equality with plain TS over 10 environments x 1000 steps
        cfg_proto = dict(
            population_size=1,
            selection_ratio=1.0,
            mutation_count=0,
            init_upper=1.0,
        )
        for e in range(10):
            env_g = BernoulliMAB(6, period=25, env_seed=1000 + e)
            env_t = BernoulliMAB(6, period=25, env_seed=1000 + e)
            gts = GTSAgent.create(6, GTSConfig(action_seed=500 + e, ga_seed=900 + e, **cfg_proto))
            ts = ThompsonAgent.create(6, seed=500 + e)
            r_g = np.random.default_rng(77 + e)
            r_t = np.random.default_rng(77 + e)
            for _ in range(1000):
                ag, at = gts.select(), ts.select()
                assert ag == at
                rg, rt = env_g.step(ag, r_g), env_t.step(at, r_t)
                assert rg == rt
                gts.update(ag, rg)
                ts.update(at, rt)
            post_s = np.array([p.s for p in ts.agent.arms])
            post_f = np.array([p.f for p in ts.agent.arms])
            assert np.array_equal(gts.population.arm_s[0], post_s)
            assert np.array_equal(gts.population.arm_f[0], post_f)
