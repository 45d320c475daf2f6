"""Reward-generating worlds: Bernoulli bandits and epidemic intervention planning."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import check_reward


# Default shape of the arm-probability distribution.  Beta(0.01, 0.02) is
# near-two-point: arms are almost always very good or very bad, with roughly a
# third good.  Agents that can shed stale beliefs are separated sharply from
# agents that cannot; a flat U(0,1) draw (prob_alpha=prob_beta=1) buries that
# contrast under mid-range arms.
PROB_ALPHA = 0.01
PROB_BETA = 0.02


class BernoulliMAB:
    """K Bernoulli arms with probabilities drawn i.i.d. Beta(prob_alpha, prob_beta).

    With a finite `period` n, all probabilities are redrawn before steps
    n+1, 2n+1, ... (1-based); the first block is never touched.  Redraws come
    from the environment's own stream so the reward stream stays independent.
    Set prob_alpha=prob_beta=1 for uniform arm probabilities.
    """

    def __init__(
        self,
        n_arms: int,
        period: int | None = None,
        env_seed=0,
        prob_alpha: float = PROB_ALPHA,
        prob_beta: float = PROB_BETA,
    ):
        if n_arms < 1:
            raise ValueError("need at least one arm")
        if period is not None and period < 1:
            raise ValueError("period must be a positive integer or None")
        if prob_alpha <= 0 or prob_beta <= 0:
            raise ValueError("arm distribution shape parameters must be positive")
        self.n_arms = n_arms
        self.period = period
        self.prob_alpha = prob_alpha
        self.prob_beta = prob_beta
        self._rng = np.random.default_rng(env_seed)
        self.probs = self._rng.beta(prob_alpha, prob_beta, size=n_arms)
        self.t = 0  # steps served so far

    def step(self, arm: int, rng: np.random.Generator) -> float:
        if not 0 <= arm < self.n_arms:
            raise IndexError(f"arm {arm} out of range for {self.n_arms} arms")
        if self.period is not None and self.t > 0 and self.t % self.period == 0:
            self.probs = self._rng.beta(self.prob_alpha, self.prob_beta, size=self.n_arms)
        self.t += 1
        return float(rng.random() < self.probs[arm])


@dataclass
class Feedback:
    reward: float
    stringency: float

    def __post_init__(self):
        if self.stringency <= 0:
            raise ValueError("stringency must be positive")


COST_FLOOR = 0.05


class EpidemicEnv:
    """Combinatorial intervention world: K dimensions, N_k levels each.

    Reward is Bernoulli of the mean per-dimension reward weight of the chosen
    levels; stringency is the sum of the chosen levels' cost weights (each
    cost >= COST_FLOOR, so stringency is strictly positive).  Nonstationary
    resets redraw reward weights only; costs stay fixed, since they are the
    public context an agent may read.
    """

    def __init__(self, levels: list[int], period: int | None = None, env_seed=0):
        if len(levels) < 1:
            raise ValueError("need at least one action dimension")
        if any(n < 2 for n in levels):
            raise ValueError("every dimension needs at least two levels")
        if period is not None and period < 1:
            raise ValueError("period must be a positive integer or None")
        self.levels = list(levels)
        self.n_dims = len(levels)
        self.period = period
        self._rng = np.random.default_rng(env_seed)
        self.reward_weights = [self._rng.uniform(0.0, 1.0, size=n) for n in levels]
        self.cost_weights = [self._rng.uniform(COST_FLOOR, 1.0, size=n) for n in levels]
        self.t = 0

    @property
    def s_max(self) -> float:
        return float(sum(c.max() for c in self.cost_weights))

    def validate(self, action: list[int]) -> None:
        if len(action) != self.n_dims:
            raise ValueError(f"action has {len(action)} dims, environment has {self.n_dims}")
        for k, (a, n) in enumerate(zip(action, self.levels)):
            if not 0 <= a < n:
                raise IndexError(f"level {a} out of range for dimension {k} ({n} levels)")

    def step(self, action: list[int], rng: np.random.Generator) -> Feedback:
        self.validate(action)
        if self.period is not None and self.t > 0 and self.t % self.period == 0:
            self.reward_weights = [self._rng.uniform(0.0, 1.0, size=n) for n in self.levels]
        self.t += 1
        mean_w = float(np.mean([self.reward_weights[k][a] for k, a in enumerate(action)]))
        reward = float(rng.random() < mean_w)
        stringency = float(sum(self.cost_weights[k][a] for k, a in enumerate(action)))
        return Feedback(reward=reward, stringency=stringency)


def scalarize(
    r: float,
    s: float,
    lam: float,
    mode: str = "convex",
    s_max: float | None = None,
) -> float:
    """Fold a (reward, stringency) pair into one reward in [0, 1].

    "literal" mode clamps r + lam/s into [0, 1].  "convex" mode (default)
    returns lam*r + (1-lam)*(1 - s/s_max), so lam=1 is purely reward-driven
    and lam=0 purely cost-driven.
    """
    if s <= 0:
        raise ValueError("stringency must be positive")
    if not 0.0 <= lam <= 1.0:
        raise ValueError("lambda must lie in [0, 1]")
    r = check_reward(r)
    if mode == "literal":
        return float(min(1.0, max(0.0, r + lam / s)))
    if mode == "convex":
        if s_max is None:
            raise ValueError("convex mode requires s_max")
        return float(lam * r + (1.0 - lam) * (1.0 - min(s, s_max) / s_max))
    raise ValueError(f"unknown scalarization mode {mode!r}")


@dataclass
class IndCombAgent:
    """Stack of per-dimension bandit agents acting as one combinatorial agent.

    Each dimension picks its level independently; every dimension's agent is
    then updated with its own chosen level and the shared scalarized reward.
    """

    agents: list  # one bandit agent per action dimension
    last_action: list[int] | None = field(default=None)

    def select(self) -> list[int]:
        self.last_action = [agent.select() for agent in self.agents]
        return self.last_action

    def update(self, action: list[int], r_star: float) -> None:
        r_star = check_reward(r_star)
        for agent, level in zip(self.agents, action):
            agent.update(level, r_star)
