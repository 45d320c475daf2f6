"""Genetic Thompson Sampling: a population of TS agents evolved every step.

One step runs: per-member recommendations -> majority vote -> environment
reward -> update of vote-aligned members (bandit and fitness posteriors) ->
stochastic fitness ranking -> truncation selection -> crossover children ->
additive mutation.  Two random streams drive a step: `action_rng` is consumed
only by the per-member Beta recommendation draws, `ga_rng` by everything the
genetic round needs (vote tie-breaks, fitness samples, crossover, mutation).
Separating the streams makes a single-member, GA-disabled population replay a
plain Thompson Sampling agent draw for draw.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .core import check_reward


@dataclass
class GTSConfig:
    population_size: int = 100
    selection_ratio: float = 0.5
    mutation_count: int = 10
    init_upper: float = 2.0
    clamp_min: float = 0.01
    crossover_enabled: bool = True
    mutation_enabled: bool = True
    blend_crossover: bool = False
    action_seed: int = 0
    ga_seed: int = 1

    def __post_init__(self):
        if self.population_size < 1:
            raise ValueError("population_size must be >= 1")
        if not 0.0 < self.selection_ratio <= 1.0:
            raise ValueError("selection_ratio must lie in (0, 1]")
        if self.mutation_count < 0:
            raise ValueError("mutation_count must be >= 0")
        if self.init_upper < 1.0:
            raise ValueError("init_upper must be >= 1")
        if self.clamp_min <= 0.0:
            raise ValueError("clamp_min must be positive")

    @property
    def elite_count(self) -> int:
        return min(self.population_size, max(1, round(self.selection_ratio * self.population_size)))


@dataclass
class Genome:
    """One member: per-arm (S, F) posteriors plus a fitness posterior."""

    arm_s: np.ndarray
    arm_f: np.ndarray
    fit_s: float = 1.0
    fit_f: float = 1.0


@dataclass
class Population:
    """Fixed-size stack of genomes, stored as (M, K) arrays for vectorized draws."""

    arm_s: np.ndarray  # (M, K)
    arm_f: np.ndarray  # (M, K)
    fit_s: np.ndarray  # (M,)
    fit_f: np.ndarray  # (M,)

    @property
    def size(self) -> int:
        return self.arm_s.shape[0]

    @property
    def n_arms(self) -> int:
        return self.arm_s.shape[1]

    def member(self, i: int) -> Genome:
        return Genome(
            arm_s=self.arm_s[i].copy(),
            arm_f=self.arm_f[i].copy(),
            fit_s=float(self.fit_s[i]),
            fit_f=float(self.fit_f[i]),
        )

    def copy(self) -> "Population":
        return Population(
            self.arm_s.copy(), self.arm_f.copy(), self.fit_s.copy(), self.fit_f.copy()
        )

    def take(self, ids: list[int]) -> "Population":
        return Population(
            self.arm_s[ids].copy(), self.arm_f[ids].copy(),
            self.fit_s[ids].copy(), self.fit_f[ids].copy(),
        )

    @classmethod
    def from_genomes(cls, genomes: list[Genome]) -> "Population":
        return cls(
            arm_s=np.stack([g.arm_s for g in genomes]).astype(float),
            arm_f=np.stack([g.arm_f for g in genomes]).astype(float),
            fit_s=np.array([g.fit_s for g in genomes], dtype=float),
            fit_f=np.array([g.fit_f for g in genomes], dtype=float),
        )


@dataclass
class StepTrace:
    """Everything that happened in one step, for tests and the UI."""

    recommendations: list[int]
    majority_action: int
    aligned_ids: list[int]
    reward: float
    fitness_samples: list[float]
    elite_ids: list[int]
    parent_pairs: list[tuple[int, int]]
    mutations: list[tuple[int, int, float, float]]  # (member, arm, dS, dF)

    def to_dict(self) -> dict:
        return {
            "recommendations": self.recommendations,
            "majority_action": self.majority_action,
            "aligned_ids": self.aligned_ids,
            "reward": self.reward,
            "fitness_samples": self.fitness_samples,
            "elite_ids": self.elite_ids,
            "parent_pairs": [list(p) for p in self.parent_pairs],
            "mutations": [list(m) for m in self.mutations],
        }


def gts_init(config: GTSConfig, n_arms: int, rng: np.random.Generator) -> Population:
    """Fresh population: per arm one draw q ~ U(1, Q) shared by S and F."""
    m, k = config.population_size, n_arms
    q = rng.uniform(1.0, config.init_upper, size=(m, k))
    return Population(
        arm_s=q.copy(),
        arm_f=q.copy(),
        fit_s=np.ones(m),
        fit_f=np.ones(m),
    )


def collect_recommendations(pop: Population, rng: np.random.Generator) -> np.ndarray:
    """Each member's Thompson pick: Beta draw per arm, argmax (ties to lowest)."""
    theta = rng.beta(pop.arm_s, pop.arm_f)
    return np.argmax(theta, axis=1)


def majority_vote(recs: np.ndarray, rng: np.random.Generator) -> int:
    if len(recs) == 0:
        raise ValueError("cannot vote over an empty recommendation list")
    counts = np.bincount(np.asarray(recs, dtype=int))
    tied = np.flatnonzero(counts == counts.max())
    if len(tied) == 1:
        return int(tied[0])
    return int(rng.choice(tied))


def update_aligned(pop: Population, a_star: int, r: float, recs: np.ndarray) -> Population:
    """Reward only the members whose recommendation matched the played arm."""
    r = check_reward(r)
    out = pop.copy()
    mask = np.asarray(recs) == a_star
    out.fit_s[mask] += r
    out.fit_f[mask] += 1.0 - r
    out.arm_s[mask, a_star] += r
    out.arm_f[mask, a_star] += 1.0 - r
    return out


def sample_fitness(pop: Population, rng: np.random.Generator) -> np.ndarray:
    return rng.beta(pop.fit_s, pop.fit_f)


def select_elites(scores: np.ndarray, elite_count: int) -> list[int]:
    """Indices of the top scores, descending; ties go to the lower index."""
    scores = np.asarray(scores)
    if elite_count > len(scores):
        raise ValueError("elite_count exceeds population size")
    order = np.lexsort((np.arange(len(scores)), -scores))
    return [int(i) for i in order[:elite_count]]


def crossover_fill(
    elites: Population,
    child_count: int,
    rng: np.random.Generator,
    blend: bool = False,
    parent_pairs: list[tuple[int, int]] | None = None,
) -> Population | None:
    """Children built arm-by-arm from two uniformly drawn elite parents.

    Default mode copies one parent's (S, F) pair verbatim per arm; blend mode
    mixes the two parents with a per-arm uniform weight instead.  Children
    always start with fitness (1, 1).  Parent indices (into the elite list)
    are appended to `parent_pairs` when given.
    """
    if elites.size < 1:
        raise ValueError("need at least one elite parent")
    if child_count == 0:
        return None
    k = elites.n_arms
    pa = rng.integers(elites.size, size=child_count)
    pb = rng.integers(elites.size, size=child_count)
    if parent_pairs is not None:
        parent_pairs.extend((int(a), int(b)) for a, b in zip(pa, pb))
    if blend:
        w = rng.random(size=(child_count, k))
        child_s = w * elites.arm_s[pa] + (1.0 - w) * elites.arm_s[pb]
        child_f = w * elites.arm_f[pa] + (1.0 - w) * elites.arm_f[pb]
    else:
        take_a = rng.random(size=(child_count, k)) < 0.5
        child_s = np.where(take_a, elites.arm_s[pa], elites.arm_s[pb])
        child_f = np.where(take_a, elites.arm_f[pa], elites.arm_f[pb])
    return Population(
        arm_s=child_s,
        arm_f=child_f,
        fit_s=np.ones(child_count),
        fit_f=np.ones(child_count),
    )


def mutate(
    pop: Population,
    mutation_count: int,
    clamp_min: float,
    rng: np.random.Generator,
    records: list[tuple[int, int, float, float]] | None = None,
) -> Population:
    """Perturb random (member, arm) posteriors with independent U(-1, 1) deltas.

    Each hit clamps the result at `clamp_min` so the Beta stays well-defined.
    Fitness posteriors are never touched.
    """
    out = pop.copy()
    m, k = out.size, out.n_arms
    for _ in range(mutation_count):
        i = int(rng.integers(m))
        a = int(rng.integers(k))
        ds = float(rng.uniform(-1.0, 1.0))
        df = float(rng.uniform(-1.0, 1.0))
        out.arm_s[i, a] = max(clamp_min, out.arm_s[i, a] + ds)
        out.arm_f[i, a] = max(clamp_min, out.arm_f[i, a] + df)
        if records is not None:
            records.append((i, a, ds, df))
    return out


def ga_round(
    pop: Population, config: GTSConfig, ga_rng: np.random.Generator
) -> tuple[Population, list[float], list[int], list[tuple[int, int]], list[tuple[int, int, float, float]]]:
    """Selection, crossover, mutation after the update phase of one step.

    With crossover disabled (ablation) the selection phase is skipped
    entirely and every member survives in place, so the variant differs from
    plain TS only through voting and aligned updates (plus mutation if on).
    """
    parent_pairs: list[tuple[int, int]] = []
    mutations: list[tuple[int, int, float, float]] = []
    if config.crossover_enabled:
        scores = sample_fitness(pop, ga_rng)
        elite_ids = select_elites(scores, config.elite_count)
        elites = pop.take(elite_ids)
        children = crossover_fill(
            elites,
            pop.size - len(elite_ids),
            ga_rng,
            blend=config.blend_crossover,
            parent_pairs=parent_pairs,
        )
        if children is None:
            pop = elites
        else:
            pop = Population(
                np.concatenate([elites.arm_s, children.arm_s]),
                np.concatenate([elites.arm_f, children.arm_f]),
                np.concatenate([elites.fit_s, children.fit_s]),
                np.concatenate([elites.fit_f, children.fit_f]),
            )
        fitness_samples = [float(s) for s in scores]
    else:
        elite_ids = list(range(pop.size))
        fitness_samples = []
    if config.mutation_enabled and config.mutation_count > 0:
        pop = mutate(pop, config.mutation_count, config.clamp_min, ga_rng, records=mutations)
    return pop, fitness_samples, elite_ids, parent_pairs, mutations


def gts_step(
    pop: Population,
    config: GTSConfig,
    reward_fn: Callable[[int], float],
    action_rng: np.random.Generator,
    ga_rng: np.random.Generator,
) -> tuple[Population, StepTrace]:
    """One full step: recommend, vote, reward, update, then the GA round."""
    recs = collect_recommendations(pop, action_rng)
    a_star = majority_vote(recs, ga_rng)
    r = check_reward(reward_fn(a_star))
    pop = update_aligned(pop, a_star, r, recs)
    pop, fitness_samples, elite_ids, parent_pairs, mutations = ga_round(pop, config, ga_rng)
    trace = StepTrace(
        recommendations=[int(a) for a in recs],
        majority_action=a_star,
        aligned_ids=[int(i) for i in np.flatnonzero(np.asarray(recs) == a_star)],
        reward=r,
        fitness_samples=fitness_samples,
        elite_ids=elite_ids,
        parent_pairs=parent_pairs,
        mutations=mutations,
    )
    return pop, trace


@dataclass
class GTSAgent:
    """Harness-facing wrapper: select() then update() together form one step."""

    config: GTSConfig
    population: Population
    action_rng: np.random.Generator
    ga_rng: np.random.Generator
    last_trace: StepTrace | None = field(default=None)
    _pending_recs: np.ndarray | None = field(default=None)
    _pending_action: int | None = field(default=None)

    @classmethod
    def create(cls, n_arms: int, config: GTSConfig, init_seed=None) -> "GTSAgent":
        init_rng = np.random.default_rng(config.ga_seed if init_seed is None else init_seed)
        return cls(
            config=config,
            population=gts_init(config, n_arms, init_rng),
            action_rng=np.random.default_rng(config.action_seed),
            ga_rng=np.random.default_rng(config.ga_seed),
        )

    def select(self) -> int:
        self._pending_recs = collect_recommendations(self.population, self.action_rng)
        self._pending_action = majority_vote(self._pending_recs, self.ga_rng)
        return self._pending_action

    def update(self, arm: int, r: float) -> None:
        if self._pending_recs is None:
            raise RuntimeError("update() called before select()")
        recs, a_star = self._pending_recs, self._pending_action
        self._pending_recs = None
        self._pending_action = None
        pop = update_aligned(self.population, a_star, check_reward(r), recs)
        pop, fitness_samples, elite_ids, parent_pairs, mutations = ga_round(
            pop, self.config, self.ga_rng
        )
        self.population = pop
        self.last_trace = StepTrace(
            recommendations=[int(a) for a in recs],
            majority_action=int(a_star),
            aligned_ids=[int(i) for i in np.flatnonzero(np.asarray(recs) == a_star)],
            reward=float(r),
            fitness_samples=fitness_samples,
            elite_ids=elite_ids,
            parent_pairs=parent_pairs,
            mutations=mutations,
        )
