"""Population-of-bandits workbench: Genetic Thompson Sampling and friends."""

from .core import (
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
from .envs import BernoulliMAB, EpidemicEnv, Feedback, IndCombAgent, scalarize
from .metrics import ParetoPoint, Summary, cases_metric, pareto_frontier, quantile_bin, summarize
from .genetic import (
    Genome,
    GTSAgent,
    GTSConfig,
    Population,
    StepTrace,
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

__all__ = [name for name in dir() if not name.startswith("_")]
