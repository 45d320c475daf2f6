"""Experiment orchestration: seeded trials, summaries, and the table/figure runs."""

from __future__ import annotations

import csv
import dataclasses
import hashlib
import json
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from .core import RandomAgent, RandomFixedAgent, ThompsonAgent, UCB1Agent
from .envs import PROB_ALPHA, PROB_BETA, BernoulliMAB, EpidemicEnv, IndCombAgent, scalarize
from .genetic import GTSAgent, GTSConfig
from .metrics import ParetoPoint, Summary, pareto_frontier, quantile_bin, summarize

AGENT_KINDS = ("random", "random-fixed", "ts", "ucb1", "gts", "indcomb-gts")


def derive_seed(base_seed: int, trial_index: int, role: str) -> int:
    """Deterministic per-trial, per-role seed via sha256(base:trial:role)."""
    digest = hashlib.sha256(f"{base_seed}:{trial_index}:{role}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


# GTS presets: selection ratio 0.5, mutation count scaled with the population
# (1.5 per member) so bigger populations keep their advantage instead of being
# diluted per capita.
GTS_POPULATION_PRESETS: dict[str, GTSConfig] = {
    "p10": GTSConfig(population_size=10, mutation_count=15, init_upper=1.0),
    "p25": GTSConfig(population_size=25, mutation_count=37, init_upper=1.0),
    "p100": GTSConfig(population_size=100, mutation_count=150, init_upper=1.0),
}

# m-variants from the mutation-rate study, all at population 100
GTS_MUTATION_PRESETS: dict[str, GTSConfig] = {
    "m10": GTSConfig(population_size=100, mutation_count=10, init_upper=1.0),
    "m50": GTSConfig(population_size=100, mutation_count=50, init_upper=1.0),
    "m150": GTSConfig(population_size=100, mutation_count=150, init_upper=1.0),
}

# Component-ablation base: a smaller population under strong selection pressure
# and heavy mutation, where each operator's removal is most visible.
ABLATION_BASE = GTSConfig(
    population_size=50, selection_ratio=0.25, mutation_count=250, init_upper=1.0
)


@dataclass
class ExperimentConfig:
    agent: str = "ts"
    env: str = "mab"  # "mab" | "epidemic"
    n_arms: int = 10
    period: int | None = 10  # None = stationary
    horizon: int = 100
    trials: int = 50
    base_seed: int = 0
    prob_alpha: float = PROB_ALPHA
    prob_beta: float = PROB_BETA
    gts: GTSConfig | None = None  # template; per-trial seeds are injected
    levels: list[int] = field(default_factory=lambda: [3, 3, 3, 3])
    lam: float = 1.0
    scalarize_mode: str = "convex"

    def __post_init__(self):
        if self.agent not in AGENT_KINDS:
            raise ValueError(f"unknown agent kind {self.agent!r}")
        if self.env not in ("mab", "epidemic"):
            raise ValueError(f"unknown environment kind {self.env!r}")
        if self.horizon < 1 or self.trials < 1:
            raise ValueError("horizon and trials must be positive")
        if self.env == "mab" and self.agent == "indcomb-gts":
            raise ValueError("indcomb-gts needs the combinatorial epidemic environment")
        if self.env == "epidemic" and self.agent in ("gts", "ucb1"):
            raise ValueError(f"{self.agent} acts on flat arms; use indcomb-gts or random here")
        if self.agent in ("gts", "indcomb-gts") and self.gts is None:
            self.gts = GTS_POPULATION_PRESETS["p100"]

    def label(self) -> str:
        if self.env == "epidemic":
            kind = "stationary" if self.period is None else f"ns{self.period}"
            return f"epidemic-{'x'.join(map(str, self.levels))}-{kind}-lam{self.lam}"
        kind = "stationary" if self.period is None else f"ns{self.period}"
        return f"mab{self.n_arms}-{kind}"


@dataclass
class Trajectory:
    rewards: list[float]
    costs: list[float] | None = None

    @property
    def cumulative_reward(self) -> float:
        return float(sum(self.rewards))

    @property
    def cumulative_cost(self) -> float:
        if self.costs is None:
            raise ValueError("no cost track recorded for this trajectory")
        return float(sum(self.costs))


def _build_flat_agent(cfg: ExperimentConfig, n_arms: int, trial: int):
    action_seed = derive_seed(cfg.base_seed, trial, "action")
    ga_seed = derive_seed(cfg.base_seed, trial, "ga")
    if cfg.agent == "random":
        return RandomAgent.create(n_arms, action_seed)
    if cfg.agent == "random-fixed":
        return RandomFixedAgent.create(n_arms, action_seed)
    if cfg.agent == "ts":
        return ThompsonAgent.create(n_arms, action_seed)
    if cfg.agent == "ucb1":
        return UCB1Agent.create(n_arms)
    if cfg.agent == "gts":
        conf = replace(cfg.gts, action_seed=action_seed, ga_seed=ga_seed)
        return GTSAgent.create(n_arms, conf)
    raise ValueError(f"agent {cfg.agent!r} is not a flat-arm agent")


def run_trial(cfg: ExperimentConfig, trial_index: int) -> Trajectory:
    env_seed = derive_seed(cfg.base_seed, trial_index, "env")
    reward_rng = np.random.default_rng(derive_seed(cfg.base_seed, trial_index, "reward"))

    if cfg.env == "mab":
        env = BernoulliMAB(
            cfg.n_arms,
            period=cfg.period,
            env_seed=env_seed,
            prob_alpha=cfg.prob_alpha,
            prob_beta=cfg.prob_beta,
        )
        agent = _build_flat_agent(cfg, cfg.n_arms, trial_index)
        rewards = []
        for _ in range(cfg.horizon):
            arm = agent.select()
            r = env.step(arm, reward_rng)
            agent.update(arm, r)
            rewards.append(r)
        return Trajectory(rewards=rewards)

    env = EpidemicEnv(cfg.levels, period=cfg.period, env_seed=env_seed)
    if cfg.agent == "indcomb-gts":
        subs = []
        for k, n_levels in enumerate(cfg.levels):
            conf = replace(
                cfg.gts,
                action_seed=derive_seed(cfg.base_seed, trial_index, f"action:{k}"),
                ga_seed=derive_seed(cfg.base_seed, trial_index, f"ga:{k}"),
            )
            subs.append(GTSAgent.create(n_levels, conf))
        agent = IndCombAgent(agents=subs)
    elif cfg.agent in ("random", "random-fixed"):
        maker = RandomAgent if cfg.agent == "random" else RandomFixedAgent
        agent = IndCombAgent(
            agents=[
                maker.create(n_levels, derive_seed(cfg.base_seed, trial_index, f"action:{k}"))
                for k, n_levels in enumerate(cfg.levels)
            ]
        )
    else:
        raise ValueError(f"agent {cfg.agent!r} cannot act on the epidemic environment")

    rewards, costs = [], []
    s_max = env.s_max
    for _ in range(cfg.horizon):
        action = agent.select()
        fb = env.step(action, reward_rng)
        r_star = scalarize(fb.reward, fb.stringency, cfg.lam, mode=cfg.scalarize_mode, s_max=s_max)
        agent.update(action, r_star)
        rewards.append(fb.reward)
        costs.append(fb.stringency)
    return Trajectory(rewards=rewards, costs=costs)


def run_experiment(cfg: ExperimentConfig) -> tuple[Summary, list[Trajectory]]:
    trajectories = []
    for i in range(cfg.trials):
        try:
            trajectories.append(run_trial(cfg, i))
        except Exception as exc:
            raise RuntimeError(f"trial {i} failed: {exc}") from exc
    return summarize([t.cumulative_reward for t in trajectories]), trajectories


# -- output ------------------------------------------------------------------


def write_trials_csv(path, cfg: ExperimentConfig, trajectories: list[Trajectory]) -> None:
    with_costs = trajectories[0].costs is not None
    header = ["trial_index", "seed", "cumulative_reward"]
    if with_costs:
        header.append("cumulative_cost")
    header += [f"r_{t+1}" for t in range(cfg.horizon)]
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        for i, traj in enumerate(trajectories):
            row = [i, derive_seed(cfg.base_seed, i, "env"), traj.cumulative_reward]
            if with_costs:
                row.append(traj.cumulative_cost)
            row += traj.rewards
            w.writerow(row)


def summary_record(cfg: ExperimentConfig, summary: Summary, agent_label: str | None = None) -> dict:
    conf = dataclasses.asdict(cfg)
    if cfg.gts is not None:
        conf["gts"] = dataclasses.asdict(cfg.gts)
    return {
        "agent": agent_label or cfg.agent,
        "env": cfg.label(),
        "mean": summary.mean,
        "stderr": summary.stderr,
        "trials": summary.trials,
        "config": conf,
    }


def write_summary_json(path, records: list[dict]) -> None:
    with open(path, "w") as fh:
        json.dump(records, fh, indent=2)


def write_table_csv(path, records: list[dict]) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["agent", "env", "mean", "stderr", "trials"])
        for rec in records:
            w.writerow([rec["agent"], rec["env"], rec["mean"], rec["stderr"], rec["trials"]])


# -- named studies -----------------------------------------------------------


def table1(base_seed: int = 0, trials: int = 50) -> list[dict]:
    """Baselines and GTS population variants on stationary and shifting bandits."""
    records = []
    for n_arms in (5, 10, 50):
        for period in (None, 10):
            for agent, gts in [
                ("random", None),
                ("ts", None),
                ("ucb1", None),
                ("gts-p10", GTS_POPULATION_PRESETS["p10"]),
                ("gts-p25", GTS_POPULATION_PRESETS["p25"]),
                ("gts-p100", GTS_POPULATION_PRESETS["p100"]),
            ]:
                cfg = ExperimentConfig(
                    agent="gts" if gts is not None else agent,
                    n_arms=n_arms,
                    period=period,
                    trials=trials,
                    base_seed=base_seed,
                    gts=gts,
                )
                summary, _ = run_experiment(cfg)
                records.append(summary_record(cfg, summary, agent_label=agent))
    return records


ABLATION_VARIANTS = {
    "C+M+": (True, True),
    "C-M+": (False, True),
    "C+M-": (True, False),
    "C-M-": (False, False),
}


def table2(base_seed: int = 0, trials: int = 50) -> list[dict]:
    """Crossover/mutation ablation on the shifting 10-armed bandit."""
    records = []
    for label, (cross, mut) in ABLATION_VARIANTS.items():
        conf = replace(ABLATION_BASE, crossover_enabled=cross, mutation_enabled=mut)
        cfg = ExperimentConfig(
            agent="gts", n_arms=10, period=10, trials=trials, base_seed=base_seed, gts=conf
        )
        summary, _ = run_experiment(cfg)
        records.append(summary_record(cfg, summary, agent_label=f"gts-{label}"))
    return records


def sweep_population(base_seed: int = 0, trials: int = 50, n_arms: int = 10) -> list[dict]:
    records = []
    for label, conf in GTS_POPULATION_PRESETS.items():
        cfg = ExperimentConfig(
            agent="gts", n_arms=n_arms, period=10, trials=trials, base_seed=base_seed, gts=conf
        )
        summary, _ = run_experiment(cfg)
        records.append(summary_record(cfg, summary, agent_label=f"gts-{label}"))
    return records


def sweep_mutation(base_seed: int = 0, trials: int = 50, n_arms: int = 10) -> list[dict]:
    records = []
    for label, conf in GTS_MUTATION_PRESETS.items():
        cfg = ExperimentConfig(
            agent="gts", n_arms=n_arms, period=10, trials=trials, base_seed=base_seed, gts=conf
        )
        summary, _ = run_experiment(cfg)
        records.append(summary_record(cfg, summary, agent_label=f"gts-{label}"))
    return records


DEFAULT_LAMBDAS = (0.0, 0.25, 0.5, 0.75, 1.0)
PARETO_BINS = 10


def epidemic_study(
    base_seed: int = 0,
    trials: int = 50,
    lam: float = 1.0,
    scalarize_mode: str = "convex",
    levels: list[int] | None = None,
) -> list[dict]:
    records = []
    for agent in ("indcomb-gts", "random", "random-fixed"):
        cfg = ExperimentConfig(
            agent=agent,
            env="epidemic",
            period=None,
            trials=trials,
            base_seed=base_seed,
            lam=lam,
            scalarize_mode=scalarize_mode,
            levels=levels or [3, 3, 3, 3],
        )
        summary, trajectories = run_experiment(cfg)
        rec = summary_record(cfg, summary)
        cost = summarize([t.cumulative_cost for t in trajectories])
        rec["mean_cost"] = cost.mean
        rec["stderr_cost"] = cost.stderr
        records.append(rec)
    return records


def pareto_sweep(
    base_seed: int = 0,
    trials: int = 50,
    lambdas=DEFAULT_LAMBDAS,
    agents=("indcomb-gts", "random"),
    scalarize_mode: str = "convex",
    levels: list[int] | None = None,
) -> dict:
    """Epidemic runs per (agent, lambda); pooled-binned budget/cases frontiers."""
    raw = []  # (agent, lam, mean_cost, mean_reward)
    for agent in agents:
        for lam in lambdas:
            cfg = ExperimentConfig(
                agent=agent,
                env="epidemic",
                period=None,
                trials=trials,
                base_seed=base_seed,
                lam=lam,
                scalarize_mode=scalarize_mode,
                levels=levels or [3, 3, 3, 3],
            )
            _, trajectories = run_experiment(cfg)
            raw.append(
                (
                    agent,
                    lam,
                    summarize([t.cumulative_cost for t in trajectories]).mean,
                    summarize([t.cumulative_reward for t in trajectories]).mean,
                )
            )
    # bins pooled across every agent and lambda so budgets are comparable
    budgets = quantile_bin([r[2] for r in raw], PARETO_BINS)
    reward_bins = quantile_bin([r[3] for r in raw], PARETO_BINS)
    points: dict[str, list[ParetoPoint]] = {a: [] for a in agents}
    table = []
    for (agent, lam, cost, reward), budget, rbin in zip(raw, budgets, reward_bins):
        point = ParetoPoint(budget=budget, cases=float(np.exp(-rbin)))
        points[agent].append(point)
        table.append(
            {
                "agent": agent,
                "lambda": lam,
                "mean_cost": cost,
                "mean_reward": reward,
                "budget": point.budget,
                "cases": point.cases,
            }
        )
    frontiers = {a: pareto_frontier(pts) for a, pts in points.items()}
    return {"points": table, "frontiers": frontiers}


def frontier_weakly_dominates(mine: list[ParetoPoint], other: list[ParetoPoint]) -> bool:
    """At every budget bin the other frontier reaches, mine is at least as low."""
    for q in other:
        feasible = [p.cases for p in mine if p.budget <= q.budget]
        if not feasible or min(feasible) > q.cases:
            return False
    return True


def save_records(records: list[dict], out: str | Path, fmt: str) -> None:
    if fmt == "csv":
        write_table_csv(out, records)
    elif fmt == "json":
        write_summary_json(out, records)
    else:
        raise ValueError(f"unknown output format {fmt!r}")
