"""Baseline bandit agents and the shared Beta-posterior primitive."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np


@dataclass
class ArmPosterior:
    """Success/failure mass of a Beta belief over one arm's reward rate."""

    s: float = 1.0
    f: float = 1.0

    def __post_init__(self):
        if self.s <= 0 or self.f <= 0:
            raise ValueError(f"Beta parameters must be positive, got ({self.s}, {self.f})")

    @property
    def mean(self) -> float:
        return self.s / (self.s + self.f)


def beta_sample(p: ArmPosterior, rng: np.random.Generator) -> float:
    """One draw from Beta(s, f)."""
    return float(rng.beta(p.s, p.f))


def check_reward(r: float) -> float:
    if not 0.0 <= r <= 1.0:
        raise ValueError(f"reward must lie in [0, 1], got {r}")
    return float(r)


@dataclass
class TSAgent:
    """Thompson Sampling over K Bernoulli arms with Beta(1,1) priors.

    Draw-order contract: one Beta draw per arm, ascending arm index, per
    selection.  Argmax ties break to the lowest index.
    """

    arms: list[ArmPosterior]

    @classmethod
    def fresh(cls, n_arms: int) -> "TSAgent":
        if n_arms < 1:
            raise ValueError("need at least one arm")
        return cls(arms=[ArmPosterior() for _ in range(n_arms)])

    @property
    def n_arms(self) -> int:
        return len(self.arms)


def ts_select_action(agent: TSAgent, rng: np.random.Generator) -> int:
    s = np.array([a.s for a in agent.arms])
    f = np.array([a.f for a in agent.arms])
    theta = rng.beta(s, f)
    return int(np.argmax(theta))


def ts_update(agent: TSAgent, arm: int, r: float) -> None:
    if not 0 <= arm < agent.n_arms:
        raise IndexError(f"arm {arm} out of range for {agent.n_arms} arms")
    r = check_reward(r)
    p = agent.arms[arm]
    p.s += r
    p.f += 1.0 - r


@dataclass
class UCB1State:
    """Per-arm pull counts and reward sums for the UCB1 rule."""

    pull_count: list[int]
    reward_sum: list[float]
    t: int = 0

    @classmethod
    def fresh(cls, n_arms: int) -> "UCB1State":
        return cls(pull_count=[0] * n_arms, reward_sum=[0.0] * n_arms)


def ucb1_select_action(state: UCB1State) -> int:
    for a, n in enumerate(state.pull_count):
        if n == 0:
            return a
    best, best_val = 0, -math.inf
    for a, n in enumerate(state.pull_count):
        val = state.reward_sum[a] / n + math.sqrt(2.0 * math.log(state.t) / n)
        if val > best_val:
            best, best_val = a, val
    return best


def ucb1_update(state: UCB1State, arm: int, r: float) -> None:
    r = check_reward(r)
    state.pull_count[arm] += 1
    state.reward_sum[arm] += r
    state.t += 1


def random_select_action(n_arms: int, rng: np.random.Generator) -> int:
    if n_arms < 1:
        raise ValueError("need at least one arm")
    return int(rng.integers(n_arms))


# -- harness-facing wrappers: each owns its random stream ----------------------


@dataclass
class ThompsonAgent:
    agent: TSAgent
    rng: np.random.Generator

    @classmethod
    def create(cls, n_arms: int, seed) -> "ThompsonAgent":
        return cls(agent=TSAgent.fresh(n_arms), rng=np.random.default_rng(seed))

    def select(self) -> int:
        return ts_select_action(self.agent, self.rng)

    def update(self, arm: int, r: float) -> None:
        ts_update(self.agent, arm, r)


@dataclass
class UCB1Agent:
    state: UCB1State

    @classmethod
    def create(cls, n_arms: int, seed=None) -> "UCB1Agent":
        return cls(state=UCB1State.fresh(n_arms))

    def select(self) -> int:
        return ucb1_select_action(self.state)

    def update(self, arm: int, r: float) -> None:
        ucb1_update(self.state, arm, r)


@dataclass
class RandomAgent:
    n_arms: int
    rng: np.random.Generator

    @classmethod
    def create(cls, n_arms: int, seed) -> "RandomAgent":
        return cls(n_arms=n_arms, rng=np.random.default_rng(seed))

    def select(self) -> int:
        return random_select_action(self.n_arms, self.rng)

    def update(self, arm: int, r: float) -> None:
        pass


@dataclass
class RandomFixedAgent:
    """Picks one arm uniformly at the first step and never moves again."""

    n_arms: int
    rng: np.random.Generator
    choice: int | None = field(default=None)

    @classmethod
    def create(cls, n_arms: int, seed) -> "RandomFixedAgent":
        return cls(n_arms=n_arms, rng=np.random.default_rng(seed))

    def select(self) -> int:
        if self.choice is None:
            self.choice = random_select_action(self.n_arms, self.rng)
        return self.choice

    def update(self, arm: int, r: float) -> None:
        pass
