"""Aggregation and frontier metrics: summaries, quantile bins, Pareto extraction."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass
class Summary:
    """Mean and standard error over trials.

    With a single trial the standard deviation is undefined; stderr is
    reported as 0.0 and `stderr_defined` is False.
    """

    mean: float
    stderr: float
    trials: int
    stderr_defined: bool = True


def summarize(values) -> Summary:
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        raise ValueError("cannot summarize an empty sample")
    if arr.size == 1:
        return Summary(mean=float(arr[0]), stderr=0.0, trials=1, stderr_defined=False)
    return Summary(
        mean=float(arr.mean()),
        stderr=float(arr.std(ddof=1) / math.sqrt(arr.size)),
        trials=int(arr.size),
    )


def quantile_bin(values, n_bins: int) -> list[float]:
    """Map each value to its empirical-quantile bin rank, normalized to [0, 1].

    Bin edges come from the pooled empirical distribution of `values`; ties
    share a bin.  A constant list occupies a single bin and maps to 0.
    """
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        raise ValueError("values must be nonempty")
    if n_bins < 2:
        raise ValueError("need at least two bins")
    edges = np.quantile(arr, np.arange(1, n_bins) / n_bins)
    idx = np.searchsorted(edges, arr, side="left")
    return [float(i) / (n_bins - 1) for i in idx]


def cases_metric(reward_binned: float) -> float:
    """exp(-r*) for a binned normalized reward in [0, 1]."""
    if not 0.0 <= reward_binned <= 1.0:
        raise ValueError(f"binned reward must lie in [0, 1], got {reward_binned}")
    return math.exp(-reward_binned)


@dataclass(frozen=True)
class ParetoPoint:
    budget: float
    cases: float

    def dominates(self, other: "ParetoPoint") -> bool:
        # minimize both; at least one coordinate strictly better
        return (
            self.budget <= other.budget
            and self.cases <= other.cases
            and (self.budget < other.budget or self.cases < other.cases)
        )


def pareto_frontier(points: list[ParetoPoint]) -> list[ParetoPoint]:
    """Non-dominated subset under minimize-(budget, cases), budget-ascending.

    Exact duplicates never dominate each other, so all copies of a surviving
    point survive together.
    """
    if not points:
        raise ValueError("points must be nonempty")
    ordered = sorted(points, key=lambda p: (p.budget, p.cases))
    out: list[ParetoPoint] = []
    best_cases = math.inf  # min cases over strictly smaller budgets
    i = 0
    while i < len(ordered):
        j = i
        while j < len(ordered) and ordered[j].budget == ordered[i].budget:
            j += 1
        group = ordered[i:j]
        group_min = group[0].cases
        if group_min < best_cases:
            out.extend(p for p in group if p.cases == group_min)
            best_cases = group_min
        i = j
    return out
