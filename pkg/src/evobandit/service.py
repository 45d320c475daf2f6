"""HTTP session service: stepwise GTS runs for the interactive visualization.

A session owns one population and one bandit environment.  `advance` moves it
either a whole step or one display phase at a time; seven phase advances from
idle compose to exactly one full step (same random streams, same order), so
the two granularities are interchangeable.
"""

from __future__ import annotations

import threading
import uuid
from typing import Literal, Optional

import numpy as np
from fastapi import FastAPI, HTTPException, Query
from pydantic import BaseModel, Field

from .envs import BernoulliMAB
from .genetic import (
    GTSConfig,
    Population,
    collect_recommendations,
    crossover_fill,
    gts_init,
    majority_vote,
    mutate,
    sample_fitness,
    select_elites,
    update_aligned,
)
from .harness import derive_seed

SCHEMA_VERSION = 1
MAX_POPULATION = 20
MAX_ARMS = 10

PHASES = ("recommend", "vote", "reward", "update", "select", "crossover", "mutate")


class EnvironmentSpec(BaseModel):
    kind: Literal["mab"] = "mab"
    period: Optional[int] = Field(default=None, ge=1)
    prob_alpha: float = Field(default=1.0, gt=0)
    prob_beta: float = Field(default=1.0, gt=0)


class SessionConfig(BaseModel):
    population_size: int = Field(default=5, ge=1, le=MAX_POPULATION)
    arm_count: int = Field(default=3, ge=1, le=MAX_ARMS)
    mutation_count: int = Field(default=1, ge=0)
    selection_ratio: float = Field(default=0.5, gt=0.0, le=1.0)
    init_upper: float = Field(default=1.0, ge=1.0)
    environment: EnvironmentSpec = Field(default_factory=EnvironmentSpec)
    seed: int = 0


class Session:
    def __init__(self, config: SessionConfig):
        self.config = config
        self.lock = threading.Lock()
        self._start()

    def _start(self) -> None:
        c = self.config
        self.gts = GTSConfig(
            population_size=c.population_size,
            selection_ratio=c.selection_ratio,
            mutation_count=c.mutation_count,
            init_upper=c.init_upper,
        )
        self.env = BernoulliMAB(
            c.arm_count,
            period=c.environment.period,
            env_seed=derive_seed(c.seed, 0, "env"),
            prob_alpha=c.environment.prob_alpha,
            prob_beta=c.environment.prob_beta,
        )
        self.population = gts_init(
            self.gts, c.arm_count, np.random.default_rng(derive_seed(c.seed, 0, "init"))
        )
        self.action_rng = np.random.default_rng(derive_seed(c.seed, 0, "action"))
        self.ga_rng = np.random.default_rng(derive_seed(c.seed, 0, "ga"))
        self.reward_rng = np.random.default_rng(derive_seed(c.seed, 0, "reward"))
        self.phase = "idle"
        self.step = 0  # completed steps
        self.reward_total = 0.0
        self._clear_step_fields()

    def _clear_step_fields(self) -> None:
        self.recommendations: list[int] | None = None
        self.majority_action: int | None = None
        self.reward: float | None = None
        self.aligned_ids: list[int] | None = None
        self.fitness_samples: list[float] | None = None
        self.elite_ids: list[int] | None = None
        self.eliminated_ids: list[int] | None = None
        self.parent_pairs: list[tuple[int, int]] | None = None
        self.mutations: list[tuple[int, int, float, float]] | None = None
        self._recs_array: np.ndarray | None = None
        self._elites: Population | None = None

    def advance_phase(self) -> None:
        phase = PHASES[0] if self.phase in ("idle", "mutate") else PHASES[PHASES.index(self.phase) + 1]
        if phase == "recommend":
            self._clear_step_fields()
            self._recs_array = collect_recommendations(self.population, self.action_rng)
            self.recommendations = [int(a) for a in self._recs_array]
        elif phase == "vote":
            self.majority_action = majority_vote(self._recs_array, self.ga_rng)
        elif phase == "reward":
            self.reward = self.env.step(self.majority_action, self.reward_rng)
            self.reward_total += self.reward
        elif phase == "update":
            self.population = update_aligned(
                self.population, self.majority_action, self.reward, self._recs_array
            )
            self.aligned_ids = [
                int(i) for i in np.flatnonzero(self._recs_array == self.majority_action)
            ]
        elif phase == "select":
            scores = sample_fitness(self.population, self.ga_rng)
            self.fitness_samples = [float(s) for s in scores]
            self.elite_ids = select_elites(scores, self.gts.elite_count)
            self.eliminated_ids = sorted(set(range(self.population.size)) - set(self.elite_ids))
            self._elites = self.population.take(self.elite_ids)
        elif phase == "crossover":
            pairs: list[tuple[int, int]] = []
            children = crossover_fill(
                self._elites,
                self.population.size - self._elites.size,
                self.ga_rng,
                blend=self.gts.blend_crossover,
                parent_pairs=pairs,
            )
            self.parent_pairs = pairs
            if children is None:
                self.population = self._elites
            else:
                self.population = Population(
                    np.concatenate([self._elites.arm_s, children.arm_s]),
                    np.concatenate([self._elites.arm_f, children.arm_f]),
                    np.concatenate([self._elites.fit_s, children.fit_s]),
                    np.concatenate([self._elites.fit_f, children.fit_f]),
                )
        elif phase == "mutate":
            records: list[tuple[int, int, float, float]] = []
            if self.gts.mutation_count > 0:
                self.population = mutate(
                    self.population,
                    self.gts.mutation_count,
                    self.gts.clamp_min,
                    self.ga_rng,
                    records=records,
                )
            self.mutations = records
            self.step += 1
        self.phase = phase

    def advance_full_step(self) -> None:
        # finish a partially advanced step first, then run one complete step
        if self.phase not in ("idle", "mutate"):
            while self.phase != "mutate":
                self.advance_phase()
        for _ in PHASES:
            self.advance_phase()

    def reset(self) -> None:
        self._start()

    def snapshot(self) -> dict:
        pop = self.population
        grid_max = float(max(pop.arm_s.max(), pop.arm_f.max()))
        fit_max = float(max(pop.fit_s.max(), pop.fit_f.max()))
        avg = self.reward_total / self.step if self.step else 0.0
        snap = {
            "schema_version": SCHEMA_VERSION,
            "step": self.step,
            "phase": self.phase,
            "population_size": pop.size,
            "arm_count": pop.n_arms,
            "grid": {
                "s": pop.arm_s.tolist(),
                "f": pop.arm_f.tolist(),
                "s_display": (pop.arm_s / grid_max).tolist(),
                "f_display": (pop.arm_f / grid_max).tolist(),
            },
            "fitness": {
                "s": pop.fit_s.tolist(),
                "f": pop.fit_f.tolist(),
                "s_display": (pop.fit_s / fit_max).tolist(),
                "f_display": (pop.fit_f / fit_max).tolist(),
            },
            "average_reward": avg,
            "message": (
                f"learning step {self.step}, average reward {avg:.3f}, stage {self.phase}"
            ),
        }
        for name in (
            "recommendations",
            "majority_action",
            "reward",
            "aligned_ids",
            "fitness_samples",
            "elite_ids",
            "eliminated_ids",
        ):
            value = getattr(self, name)
            if value is not None:
                snap[name] = value
        if self.parent_pairs is not None:
            snap["parent_pairs"] = [list(p) for p in self.parent_pairs]
        if self.mutations is not None:
            snap["mutations"] = [list(m) for m in self.mutations]
        return snap


def create_app() -> FastAPI:
    app = FastAPI(title="evobandit session service")
    sessions: dict[str, Session] = {}

    def get_session(session_id: str) -> Session:
        session = sessions.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail=f"unknown session {session_id!r}")
        return session

    @app.post("/sessions")
    def create_session(config: SessionConfig):
        session = Session(config)
        session_id = uuid.uuid4().hex[:12]
        sessions[session_id] = session
        return {"session_id": session_id, "snapshot": session.snapshot()}

    @app.post("/sessions/{session_id}/advance")
    def advance(
        session_id: str,
        granularity: Literal["phase", "full-step"] = Query(default="phase"),
    ):
        session = get_session(session_id)
        with session.lock:
            if granularity == "phase":
                session.advance_phase()
            else:
                session.advance_full_step()
            return session.snapshot()

    @app.post("/sessions/{session_id}/reset")
    def reset(session_id: str):
        session = get_session(session_id)
        with session.lock:
            session.reset()
            return session.snapshot()

    @app.get("/sessions/{session_id}")
    def snapshot(session_id: str):
        session = get_session(session_id)
        with session.lock:
            return session.snapshot()

    return app


app = create_app()
